#include "mcfc/pattern.hpp"

#include <bit>
#include <istream>
#include <sstream>

#include "mcfc/graph.hpp"

namespace mcfc {

PatternFunction::PatternFunction(int r) : r_(r), lists_(r * (r - 1) / 2, 0) {
    if (r < 1) throw structural_error("pattern needs at least one part");
    if (r > kMaxVertices) throw structural_error("pattern part count exceeds 64");
}

int PatternFunction::pair_index(int i, int j, int r) {
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= r || i == j) throw structural_error("bad pair index");
    return i * r - i * (i + 1) / 2 + (j - i - 1);
}

void PatternFunction::set_list(int i, int j, std::uint32_t colours) {
    lists_[pair_index(i, j, r_)] = colours;
}

int PatternFunction::list_size(int i, int j) const {
    return std::popcount(list(i, j));
}

std::vector<std::uint64_t> PatternFunction::colour_class(int c) const {
    std::vector<std::uint64_t> adj(r_, 0);
    const std::uint32_t bit = std::uint32_t{1} << (c - 1);
    for (int i = 0; i < r_; ++i) {
        for (int j = i + 1; j < r_; ++j) {
            if (list(i, j) & bit) {
                adj[i] |= std::uint64_t{1} << j;
                adj[j] |= std::uint64_t{1} << i;
            }
        }
    }
    return adj;
}

int PatternFunction::min_list_size() const {
    int m = 32;
    for (std::uint32_t l : lists_) m = std::min(m, std::popcount(l));
    return lists_.empty() ? 0 : m;
}

int PatternFunction::max_list_size() const {
    int m = 0;
    for (std::uint32_t l : lists_) m = std::max(m, std::popcount(l));
    return m;
}

std::optional<int> feasibility_level(const PatternFunction& phi, const ColourSpec& spec) {
    spec.validate();
    const std::uint64_t all =
        phi.parts() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << phi.parts()) - 1;
    for (int c = 1; c <= spec.colours(); ++c) {
        auto adj = phi.colour_class(c);
        if (mask_has_clique(adj, all, spec.k[c - 1])) return std::nullopt;
    }
    if (phi.pair_count() == 0) return 2;  // no pairs, no list-size constraint
    return std::min(phi.min_list_size(), 2);
}

std::string format_pattern_file(const ColourSpec& spec, const PatternFunction& phi) {
    std::ostringstream out;
    out << phi.parts() << ' ' << spec.colours();
    for (int kc : spec.k) out << ' ' << kc;
    out << '\n';
    for (int i = 0; i < phi.parts(); ++i) {
        for (int j = i + 1; j < phi.parts(); ++j) {
            out << (i + 1) << ' ' << (j + 1) << ' ';
            std::uint32_t l = phi.list(i, j);
            if (l == 0) {
                out << '-';
            } else {
                bool first = true;
                for (int c = 1; c <= spec.colours(); ++c) {
                    if (l & (std::uint32_t{1} << (c - 1))) {
                        if (!first) out << ',';
                        out << c;
                        first = false;
                    }
                }
            }
            out << '\n';
        }
    }
    return out.str();
}

PatternFile parse_pattern_file(std::istream& in) {
    int r = 0, s = 0;
    if (!(in >> r >> s)) throw structural_error("pattern file: bad header");
    if (s < 1 || s > 32) throw structural_error("pattern file: colour count out of range");
    ColourSpec spec;
    spec.k.resize(s);
    for (int c = 0; c < s; ++c) {
        if (!(in >> spec.k[c])) throw structural_error("pattern file: truncated k sequence");
    }
    PatternFunction phi(r);
    std::vector<bool> seen(phi.pair_count(), false);
    int i;
    while (in >> i) {
        int j;
        std::string listtext;
        if (!(in >> j >> listtext)) throw structural_error("pattern file: truncated record");
        if (i < 1 || j < 1 || i > r || j > r || i >= j) {
            throw structural_error("pattern file: bad pair " + std::to_string(i) + " " +
                                   std::to_string(j));
        }
        const int p = PatternFunction::pair_index(i - 1, j - 1, r);
        if (seen[p]) throw structural_error("pattern file: duplicate pair record");
        seen[p] = true;
        std::uint32_t mask = 0;
        if (listtext != "-") {
            std::istringstream cols(listtext);
            std::string piece;
            while (std::getline(cols, piece, ',')) {
                int c = 0;
                try {
                    c = std::stoi(piece);
                } catch (const std::exception&) {
                    throw structural_error("pattern file: bad colour \"" + piece + "\"");
                }
                if (c < 1 || c > s) throw structural_error("pattern file: colour out of range");
                mask |= std::uint32_t{1} << (c - 1);
            }
        }
        phi.set_list_at(p, mask);
    }
    if (!in.eof()) throw structural_error("pattern file: malformed record");
    return PatternFile{std::move(spec), std::move(phi)};
}

PatternFile parse_pattern_text(const std::string& text) {
    std::istringstream in(text);
    return parse_pattern_file(in);
}

ColourSpec ColourSpec::parse(const std::string& csv) {
    ColourSpec spec;
    std::istringstream in(csv);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        try {
            spec.k.push_back(std::stoi(piece));
        } catch (const std::exception&) {
            throw structural_error("colour spec: bad entry \"" + piece + "\"");
        }
    }
    spec.validate();
    return spec;
}

}  // namespace mcfc
