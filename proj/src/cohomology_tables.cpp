#include "dcqft/cohomology_tables.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dcqft {

namespace {

std::vector<std::string> split_factors(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == 'x' || ch == '*') {
            out.push_back(cur);
            cur.clear();
        } else if (text.compare(i, 2, "\xC3\x97") == 0) {  // UTF-8 multiplication sign
            out.push_back(cur);
            cur.clear();
            ++i;
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

int parse_positive(const std::string& digits, const std::string& factor) {
    if (digits.empty() || digits.size() > 4) throw std::invalid_argument("unknown factor: '" + factor + "'");
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("unknown factor: '" + factor + "'");
    const int d = std::stoi(digits);
    if (d < 1) throw std::invalid_argument("unknown factor: '" + factor + "'");
    return d;
}

}  // namespace

Space Space::parse(const std::string& text) {
    std::vector<int> dims;
    for (const auto& f : split_factors(text)) {
        if (f.empty()) throw std::invalid_argument("empty factor in space '" + text + "'");
        if (f[0] == 'S') {
            dims.push_back(parse_positive(f.substr(1), f));
        } else if (f[0] == 'T') {
            const int n = parse_positive(f.substr(1), f);
            dims.insert(dims.end(), static_cast<std::size_t>(n), 1);
        } else {
            throw std::invalid_argument("unknown factor: '" + f + "' (only spheres Sd and tori Tn are catalogued)");
        }
    }
    return product(std::move(dims));
}

Space Space::product(std::vector<int> sphere_dims) {
    for (int d : sphere_dims)
        if (d < 1) throw std::invalid_argument("sphere dimension must be >= 1");
    Space s;
    s.dims_ = std::move(sphere_dims);
    return s;
}

int Space::dimension() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

std::vector<long> Space::betti_sequence() const {
    std::vector<long> b{1};
    for (int d : dims_) {
        std::vector<long> next(b.size() + static_cast<std::size_t>(d), 0);
        for (std::size_t i = 0; i < b.size(); ++i) {
            next[i] += b[i];
            next[i + static_cast<std::size_t>(d)] += b[i];
        }
        b = std::move(next);
    }
    return b;
}

std::string Space::name() const {
    if (dims_.empty()) return "pt";
    std::ostringstream os;
    for (std::size_t i = 0; i < dims_.size(); ++i) os << (i ? "x" : "") << "S" << dims_[i];
    return os.str();
}

long betti(const Space& space, int degree) {
    if (degree < 0) throw std::invalid_argument("betti: negative degree");
    const auto b = space.betti_sequence();
    return static_cast<std::size_t>(degree) < b.size() ? b[static_cast<std::size_t>(degree)] : 0;
}

// Every catalogued factor has free integral cohomology, and the Kunneth Tor terms vanish.
bool torsion_free(const Space&, int) { return true; }

std::pair<long, long> topological_ranks(const Space& cauchy_surface, int k, int m) {
    if (k < 0 || m < k) throw std::invalid_argument("topological_ranks: need 0 <= k <= m");
    return {betti(cauchy_surface, k), betti(cauchy_surface, m - k)};
}

}  // namespace dcqft
