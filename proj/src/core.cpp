#include <algorithm>
#include <map>
#include <sstream>

#include "trispec/bitmatrix.hpp"
#include "trispec/rational.hpp"
#include "trispec/spectrum.hpp"

namespace trispec {

std::string int_str(const Int& v) { return v.get_str(); }

Int int_parse(const std::string& s) {
    Int v;
    if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw ParseError("not an integer: '" + s + "'");
    return v;
}

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(int_parse(s));
    Int num = int_parse(s.substr(0, slash));
    Int den = int_parse(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(num, den);
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

// ---------------------------------------------------------------------------
// Spectrum

Spectrum::Spectrum(std::vector<SpectrumEntry> entries, Rational degree)
    : entries_(std::move(entries)), degree_(std::move(degree)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].mult <= 0) throw ChecksumError("Spectrum: nonpositive multiplicity");
        if (i + 1 < entries_.size() && !(entries_[i + 1].eig < entries_[i].eig))
            throw ChecksumError("Spectrum: entries not strictly descending");
    }
    auto it = std::find_if(entries_.begin(), entries_.end(),
                           [&](const SpectrumEntry& e) { return e.eig == degree_; });
    if (it == entries_.end()) throw ChecksumError("Spectrum: degree value not present");
    degree_index_ = std::size_t(it - entries_.begin());
}

Int Spectrum::total_multiplicity() const {
    Int t = 0;
    for (const auto& e : entries_) t += e.mult;
    return t;
}

Rational Spectrum::min_eigenvalue() const {
    if (entries_.empty()) throw ChecksumError("Spectrum: empty");
    return entries_.back().eig;
}

Int Spectrum::multiplicity_of(const Rational& eig) const {
    for (const auto& e : entries_)
        if (e.eig == eig) return e.mult;
    return 0;
}

std::vector<SpectrumEntry> Spectrum::restricted_entries() const {
    std::vector<SpectrumEntry> out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        SpectrumEntry e = entries_[i];
        if (i == degree_index_) {
            e.mult -= 1;
            if (e.mult == 0) continue;
        }
        out.push_back(e);
    }
    return out;
}

std::string Spectrum::str() const {
    std::ostringstream os;
    os << "<" << degree_.str() << ";";
    bool first = true;
    for (const auto& e : restricted_entries()) {
        os << (first ? " " : ", ") << "[" << e.eig.str() << "]^" << int_str(e.mult);
        first = false;
    }
    os << ">";
    return os.str();
}

Spectrum normalize(std::vector<std::pair<Rational, Int>> raw, const Int& n, const Rational& degree) {
    if (n <= 0) throw ChecksumError("normalize: n must be positive");
    // Merge coincident eigenvalues; locate the (at most one) star entry.
    std::map<Rational, Int> merged;
    bool have_star = false;
    Rational star_eig = 0;
    for (auto& [eig, mult] : raw) {
        if (mult == kStarMult) {
            if (have_star) throw StarError("normalize: duplicate star entry");
            have_star = true;
            star_eig = eig;
            continue;
        }
        if (mult < 0) throw StarError("normalize: negative multiplicity");
        merged[eig] += mult;
    }
    Int total = 0;
    for (auto& [eig, mult] : merged) total += mult;
    if (have_star) {
        Int need = n - total;
        if (need < 0) throw StarError("normalize: star resolves to negative multiplicity");
        merged[star_eig] += need;
        total = n;
    }
    if (total != n) throw ChecksumError("normalize: total multiplicity " + int_str(total) +
                                        " != n = " + int_str(n));

    std::vector<SpectrumEntry> entries;
    for (auto it = merged.rbegin(); it != merged.rend(); ++it)
        if (it->second > 0) entries.push_back({it->first, it->second});
    if (merged.find(degree) == merged.end() || merged[degree] == 0)
        throw ChecksumError("normalize: degree eigenvalue absent");
    return Spectrum(std::move(entries), degree);
}

std::vector<std::string> spectrum_checksums(const Spectrum& s, const Int& n, const Int& k) {
    std::vector<std::string> violations;
    Int total = s.total_multiplicity();
    if (total != n)
        violations.push_back("total multiplicity " + int_str(total) + " != n = " + int_str(n));
    Rational trace = 0;
    Rational trace_sq = 0;
    for (const auto& e : s.entries()) {
        trace += e.eig * Rational(e.mult);
        trace_sq += e.eig * e.eig * Rational(e.mult);
    }
    if (trace != Rational(0))
        violations.push_back("trace " + trace.str() + " != 0");
    if (trace_sq != Rational(n * k))
        violations.push_back("trace of square " + trace_sq.str() + " != n*k = " + int_str(n * k));
    return violations;
}

// ---------------------------------------------------------------------------
// BitMatrix

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    std::size_t n = rows.size();
    BitMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw MatrixShapeError("BitMatrix: ragged rows");
        for (std::size_t j = 0; j < n; ++j) {
            int v = rows[i][j];
            if (v != 0 && v != 1) throw MatrixShapeError("BitMatrix: entries must be 0/1");
            if (i == j && v != 0) throw MatrixShapeError("BitMatrix: nonzero diagonal");
            if (v != rows[j][i]) throw MatrixShapeError("BitMatrix: not symmetric");
            if (v && i < j) m.set_edge(i, j);
        }
    }
    return m;
}

std::size_t BitMatrix::row_degree(std::size_t i) const {
    std::size_t c = 0;
    const std::uint64_t* r = row(i);
    for (std::size_t w = 0; w < words_per_row_; ++w) c += std::size_t(__builtin_popcountll(r[w]));
    return c;
}

std::size_t BitMatrix::common_neighbors(std::size_t i, std::size_t j) const {
    std::size_t c = 0;
    const std::uint64_t* a = row(i);
    const std::uint64_t* b = row(j);
    for (std::size_t w = 0; w < words_per_row_; ++w)
        c += std::size_t(__builtin_popcountll(a[w] & b[w]));
    return c;
}

std::optional<std::size_t> BitMatrix::regular_degree() const {
    if (n_ == 0) return std::nullopt;
    std::size_t k = row_degree(0);
    for (std::size_t i = 1; i < n_; ++i)
        if (row_degree(i) != k) return std::nullopt;
    return k;
}

std::size_t BitMatrix::component_count() const {
    std::vector<char> seen(n_, 0);
    std::vector<std::size_t> stack;
    std::size_t comps = 0;
    for (std::size_t s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        ++comps;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            const std::uint64_t* r = row(v);
            for (std::size_t w = 0; w < words_per_row_; ++w) {
                std::uint64_t bitsw = r[w];
                while (bitsw) {
                    std::size_t j = (w << 6) + std::size_t(__builtin_ctzll(bitsw));
                    bitsw &= bitsw - 1;
                    if (!seen[j]) {
                        seen[j] = 1;
                        stack.push_back(j);
                    }
                }
            }
        }
    }
    return comps;
}

bool BitMatrix::is_connected() const { return n_ <= 1 || component_count() == 1; }

std::size_t BitMatrix::edge_count() const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n_; ++i) total += row_degree(i);
    return total / 2;
}

BitMatrix BitMatrix::complement() const {
    BitMatrix c(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (!test(i, j)) c.set_edge(i, j);
    return c;
}

} // namespace trispec
