#include "mcfc/patterns.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "mcfc/graph.hpp"

namespace mcfc {

namespace {

std::string serialise_lists(const PatternFunction& phi) {
    std::string out(phi.pair_count(), '\0');
    for (int p = 0; p < phi.pair_count(); ++p) {
        out[p] = static_cast<char>(phi.list_at(p) & 0xff);
    }
    return out;
}

PatternFunction pattern_from_serialised(int r, const std::string& bytes) {
    PatternFunction phi(r);
    for (int p = 0; p < phi.pair_count(); ++p) {
        phi.set_list_at(p, static_cast<std::uint8_t>(bytes[p]));
    }
    return phi;
}

std::string to_hex(const std::string& bytes) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char b : bytes) {
        out += digits[b >> 4];
        out += digits[b & 0xf];
    }
    return out;
}

// Colour permutations that only swap colours with equal k_c.
std::vector<std::vector<int>> k_preserving_colour_perms(const ColourSpec& spec) {
    const int s = spec.colours();
    std::vector<int> perm(s);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int c = 0; c < s; ++c) {
            if (spec.k[perm[c]] != spec.k[c]) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::uint32_t remap_colours(std::uint32_t mask, const std::vector<int>& perm) {
    std::uint32_t out = 0;
    std::uint32_t rest = mask;
    while (rest) {
        const int c = std::countr_zero(rest);
        rest &= rest - 1;
        out |= std::uint32_t{1} << perm[c];
    }
    return out;
}

}  // namespace

CanonicalPattern canonical_form(const PatternFunction& phi, const ColourSpec& spec) {
    spec.validate();
    const int r = phi.parts();
    if (r > 8) throw structural_error("canonical_form minimises explicitly, needs r <= 8");
    if (spec.colours() > 8) throw structural_error("canonical_form needs s <= 8");

    const auto colour_perms = k_preserving_colour_perms(spec);
    std::vector<int> part_perm(r);
    std::iota(part_perm.begin(), part_perm.end(), 0);

    std::set<std::string> orbit;
    std::string best;
    do {
        for (const auto& cperm : colour_perms) {
            PatternFunction image(r);
            for (int i = 0; i < r; ++i) {
                for (int j = i + 1; j < r; ++j) {
                    image.set_list(part_perm[i], part_perm[j],
                                   remap_colours(phi.list(i, j), cperm));
                }
            }
            std::string code = serialise_lists(image);
            if (best.empty() || code < best) best = code;
            orbit.insert(std::move(code));
        }
    } while (std::next_permutation(part_perm.begin(), part_perm.end()));

    return CanonicalPattern{pattern_from_serialised(r, best), to_hex(best),
                            static_cast<std::uint64_t>(orbit.size())};
}

namespace {

// Shared pair-by-pair backtracking over list choices with incremental
// clique pruning on every colour class. Returns false when the budget ran
// out. `emit` gets each fully assigned pattern and says whether to go on.
class PatternSearch {
public:
    PatternSearch(const ColourSpec& spec, int r, std::vector<std::uint32_t> choices,
                  std::vector<int> pair_order, std::uint64_t budget)
        : spec_(spec),
          r_(r),
          choices_(std::move(choices)),
          order_(std::move(pair_order)),
          budget_(budget),
          phi_(r),
          class_adj_(spec.colours(), std::vector<std::uint64_t>(r, 0)) {
        pairs_.resize(order_.size());
        for (std::size_t at = 0; at < order_.size(); ++at) {
            // recover (i, j) from the pair index
            int idx = order_[at];
            int i = 0;
            while (idx >= r_ - 1 - i) idx -= r_ - 1 - i, ++i;
            pairs_[at] = {i, i + 1 + idx};
        }
    }

    template <typename Emit>
    bool run(Emit&& emit) {
        return descend(0, emit);
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool colours_ok(int i, int j, std::uint32_t list) {
        std::uint32_t rest = list;
        while (rest) {
            const int c = std::countr_zero(rest);
            rest &= rest - 1;
            const auto& adj = class_adj_[c];
            const std::uint64_t common = adj[i] & adj[j];
            if (mask_has_clique(adj, common, spec_.k[c] - 2)) return false;
        }
        return true;
    }

    void apply(int i, int j, std::uint32_t list, bool on) {
        std::uint32_t rest = list;
        while (rest) {
            const int c = std::countr_zero(rest);
            rest &= rest - 1;
            if (on) {
                class_adj_[c][i] |= std::uint64_t{1} << j;
                class_adj_[c][j] |= std::uint64_t{1} << i;
            } else {
                class_adj_[c][i] &= ~(std::uint64_t{1} << j);
                class_adj_[c][j] &= ~(std::uint64_t{1} << i);
            }
        }
    }

    template <typename Emit>
    bool descend(std::size_t at, Emit& emit) {
        if (at == order_.size()) {
            return emit(phi_);
        }
        const auto [i, j] = pairs_[at];
        for (std::uint32_t list : choices_) {
            if (nodes_ == budget_) {
                truncated_ = true;
                return false;
            }
            ++nodes_;
            if (!colours_ok(i, j, list)) continue;
            apply(i, j, list, true);
            phi_.set_list(i, j, list);
            const bool keep_going = descend(at + 1, emit);
            phi_.set_list(i, j, 0);
            apply(i, j, list, false);
            if (!keep_going) return false;
        }
        return true;
    }

    const ColourSpec& spec_;
    int r_;
    std::vector<std::uint32_t> choices_;
    std::vector<int> order_;
    std::vector<std::pair<int, int>> pairs_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    PatternFunction phi_;
    std::vector<std::vector<std::uint64_t>> class_adj_;

public:
    bool truncated_ = false;
};

}  // namespace

PatternStream enumerate_patterns(const ColourSpec& spec, int r, int t, std::uint64_t budget,
                                 const std::vector<int>* pair_order) {
    spec.validate();
    if (r < 1) throw structural_error("enumerate_patterns needs r >= 1");
    if (t < 0 || t > 2) throw structural_error("t must be in {0,1,2}");

    PatternStream stream;
    if (r == 1) {
        stream.classes.push_back(canonical_form(PatternFunction(1), spec));
        return stream;
    }

    std::vector<std::uint32_t> choices;
    for (std::uint32_t list = 0; list < (std::uint32_t{1} << spec.colours()); ++list) {
        if (std::popcount(list) >= t) choices.push_back(list);
    }

    std::vector<int> order(r * (r - 1) / 2);
    std::iota(order.begin(), order.end(), 0);
    if (pair_order) {
        if (pair_order->size() != order.size()) {
            throw structural_error("pair_order must permute all pairs");
        }
        order = *pair_order;
    }

    PatternSearch search(spec, r, std::move(choices), std::move(order), budget);
    search.run([&](const PatternFunction& phi) {
        auto canon = canonical_form(phi, spec);
        if (canon.pattern == phi) stream.classes.push_back(std::move(canon));
        return true;
    });
    stream.truncated = search.truncated_;
    stream.nodes = search.nodes();
    std::sort(stream.classes.begin(), stream.classes.end(),
              [](const CanonicalPattern& a, const CanonicalPattern& b) {
                  return a.canonical_code < b.canonical_code;
              });
    return stream;
}

// ---- Ramsey limits ----

std::string ramsey_table_path() {
    if (const char* env = std::getenv("MCFC_DATA_DIR")) {
        return std::string(env) + "/ramsey_small.txt";
    }
    return std::string(MCFC_DEFAULT_DATA_DIR) + "/ramsey_small.txt";
}

namespace {

struct TableEntry {
    long long value;
    std::string source;
};

struct RamseyTable {
    std::string version = "unversioned";
    std::map<std::string, TableEntry> entries;  // key: sorted k, csv
};

std::string sorted_key(const ColourSpec& spec) {
    auto k = spec.k;
    std::sort(k.begin(), k.end());
    std::string key;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) key += ',';
        key += std::to_string(k[i]);
    }
    return key;
}

const RamseyTable& load_ramsey_table() {
    static const RamseyTable table = [] {
        RamseyTable t;
        std::ifstream in(ramsey_table_path());
        if (!in) return t;
        std::string line;
        while (std::getline(in, line)) {
            if (line.starts_with("# version ")) {
                t.version = line.substr(10);
                continue;
            }
            const auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            std::istringstream fields(line);
            std::string key, kind, source;
            long long value;
            if (!(fields >> key >> value >> kind)) continue;
            std::getline(fields, source);
            const auto start = source.find_first_not_of(' ');
            source = start == std::string::npos ? "" : source.substr(start);
            if (kind == "exact-known") t.entries[key] = {value, source};
        }
        return t;
    }();
    return table;
}

}  // namespace

std::string ramsey_table_version() { return load_ramsey_table().version; }

RamseyLimit ramsey_limit(const ColourSpec& spec) {
    spec.validate();
    const auto& table = load_ramsey_table();
    const auto it = table.entries.find(sorted_key(spec));
    if (it != table.entries.end()) {
        return RamseyLimit{it->second.value, RamseyLimit::Kind::exact_known,
                           "table: " + it->second.source};
    }
    BigInt bound = 1;
    int total = 0;
    for (int kc : spec.k) {
        // running multinomial: prod C(total + k_c - 1, k_c - 1)
        for (int i = 1; i <= kc - 1; ++i) {
            bound *= total + i;
            bound /= i;
        }
        total += kc - 1;
    }
    if (bound > BigInt(std::numeric_limits<long long>::max())) {
        throw structural_error("multinomial Ramsey bound overflows for this spec");
    }
    return RamseyLimit{bound.convert_to<long long>(), RamseyLimit::Kind::upper_bound,
                       "multinomial bound"};
}

const char* ramsey_kind_name(RamseyLimit::Kind kind) {
    switch (kind) {
        case RamseyLimit::Kind::exact_known: return "exact-known";
        case RamseyLimit::Kind::exact_verified: return "exact-verified";
        case RamseyLimit::Kind::upper_bound: return "upper-bound";
    }
    return "?";
}

RamseyVerification verify_ramsey(const ColourSpec& spec, int r, std::uint64_t budget) {
    spec.validate();
    if (r < 1) throw structural_error("verify_ramsey needs r >= 1");
    RamseyVerification result{RamseyDecision::does_not_admit, {}, 0};
    auto witness = find_valid_colouring(SimpleGraph::complete(r), spec, budget, result.nodes);
    if (witness) {
        result.decision = RamseyDecision::admits;
        result.witness = std::move(*witness);
    }
    return result;
}

RamseyLimit verify_ramsey_limit(const ColourSpec& spec, std::uint64_t budget) {
    RamseyLimit limit = ramsey_limit(spec);
    std::uint64_t used = 0;
    auto below = verify_ramsey(spec, static_cast<int>(limit.value) - 1, budget);
    used += below.nodes;
    if (below.decision != RamseyDecision::admits) {
        throw structural_error("table value refuted: K_{R-1} admits no valid colouring");
    }
    auto at = verify_ramsey(spec, static_cast<int>(limit.value), budget - used);
    if (at.decision != RamseyDecision::does_not_admit) {
        throw structural_error("table value refuted: K_R still admits a valid colouring");
    }
    limit.kind = RamseyLimit::Kind::exact_verified;
    limit.method += "; verified exhaustively";
    return limit;
}

ListRamseyResult list_ramsey_search(const ColourSpec& spec, int r, std::uint64_t budget) {
    spec.validate();
    if (r < 1) throw structural_error("list_ramsey_search needs r >= 1");

    ListRamseyResult result;
    if (r == 1) {
        result.witness = PatternFunction(1);
        return result;
    }

    std::vector<std::uint32_t> choices;
    for (std::uint32_t list = 0; list < (std::uint32_t{1} << spec.colours()); ++list) {
        if (std::popcount(list) == 2) choices.push_back(list);
    }
    std::vector<int> order(r * (r - 1) / 2);
    std::iota(order.begin(), order.end(), 0);

    PatternSearch search(spec, r, std::move(choices), std::move(order), budget);
    search.run([&](const PatternFunction& phi) {
        result.witness = phi;
        return false;  // first witness settles it
    });
    result.nodes = search.nodes();
    if (search.truncated_) {
        throw budget_exhausted(result.nodes, BigInt(0), "list-Ramsey search undecided");
    }
    result.forced = !result.witness.has_value();
    return result;
}

}  // namespace mcfc
