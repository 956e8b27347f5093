#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "aslab/roots.hpp"

namespace aslab {

enum class CoordKind { Rational, PRoot };

// Finitely supported vector over the canonical basis (or, with the dual flag,
// over the biorthogonal functionals). Coordinates are PthRootCoord scalars
// with one q shared by the whole vector; plain rational coordinates are the
// base == 1 case. No explicit zeros are stored.
class FinVec {
  public:
    explicit FinVec(unsigned q = 1, bool dual = false) : q_(q), dual_(dual) {
        if (q_ < 1) throw std::invalid_argument("FinVec: q must be >= 1");
    }

    static FinVec basis(std::int64_t i, unsigned q = 1, bool dual = false) {
        FinVec v(q, dual);
        v.set(i, Rational(1));
        return v;
    }

    unsigned q() const { return q_; }
    bool dual() const { return dual_; }
    CoordKind kind() const;

    const std::map<std::int64_t, PthRootCoord>& coords() const { return coords_; }
    bool empty() const { return coords_.empty(); }
    std::size_t support_size() const { return coords_.size(); }
    std::int64_t min_support() const { return coords_.begin()->first; }
    std::int64_t max_support() const { return coords_.rbegin()->first; }
    std::vector<std::int64_t> support() const;

    PthRootCoord coord(std::int64_t i) const;
    void set(std::int64_t i, const Rational& c);
    void set(std::int64_t i, const PthRootCoord& c);

    FinVec restrict_to(std::int64_t lo, std::int64_t hi) const;
    FinVec scale(const Rational& c) const;
    FinVec scale(const PthRootCoord& c) const;
    FinVec flip_signs(const std::vector<int>& signs) const;  // one sign per support point

    // Coordinate-wise sum; throws if colliding coordinates cannot be added
    // exactly (incompatible radical bases).
    friend FinVec operator+(const FinVec& a, const FinVec& b);

    friend bool operator==(const FinVec& a, const FinVec& b);

  private:
    unsigned q_;
    bool dual_;
    std::map<std::int64_t, PthRootCoord> coords_;
};

}  // namespace aslab
