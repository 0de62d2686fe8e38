#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "trispec/rational.hpp"

namespace trispec {

struct SpectrumEntry {
    Rational eig;
    Int mult;
    friend bool operator==(const SpectrumEntry& a, const SpectrumEntry& b) {
        return a.eig == b.eig && a.mult == b.mult;
    }
};

// Ordered spectrum of a regular graph: entries sorted by eigenvalue descending,
// eigenvalues pairwise distinct, no zero multiplicities.  The degree (Perron)
// value is carried separately; for a connected graph it is the maximum entry
// with multiplicity 1, for a disconnected regular graph the same eigenvalue
// carries the extra components' multiplicity merged into one entry.
class Spectrum {
public:
    Spectrum() = default;
    Spectrum(std::vector<SpectrumEntry> entries, Rational degree);

    const std::vector<SpectrumEntry>& entries() const { return entries_; }
    const Rational& degree() const { return degree_; }
    std::size_t degree_index() const { return degree_index_; }

    Int total_multiplicity() const;
    Rational min_eigenvalue() const;
    Int multiplicity_of(const Rational& eig) const;

    // Entries with one copy of the degree removed (the restricted part).
    std::vector<SpectrumEntry> restricted_entries() const;

    // Rendered as <k; [e1]^m1, ...>.
    std::string str() const;

    friend bool operator==(const Spectrum& a, const Spectrum& b) {
        return a.degree_ == b.degree_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Spectrum& a, const Spectrum& b) { return !(a == b); }

private:
    std::vector<SpectrumEntry> entries_;
    Rational degree_;
    std::size_t degree_index_ = 0;
};

// Star sentinel: in the construction API a multiplicity of kStarMult marks the
// one entry whose multiplicity absorbs whatever is left of n.
inline const Int kStarMult = Int(-1);

// Sorts, merges coincident eigenvalues, resolves the star entry against n and
// flags the degree entry.  Throws StarError / ChecksumError on bad input.
Spectrum normalize(std::vector<std::pair<Rational, Int>> raw, const Int& n, const Rational& degree);

// Empty iff Sum(mult) = n, Sum(mult*eig) = 0 and Sum(mult*eig^2) = n*k.
std::vector<std::string> spectrum_checksums(const Spectrum& s, const Int& n, const Int& k);

} // namespace trispec
