#include "aslab/finvec.hpp"

namespace aslab {

CoordKind FinVec::kind() const {
    for (const auto& [i, c] : coords_) {
        if (!(c.base() == Rational(1))) return CoordKind::PRoot;
    }
    return CoordKind::Rational;
}

std::vector<std::int64_t> FinVec::support() const {
    std::vector<std::int64_t> s;
    s.reserve(coords_.size());
    for (const auto& [i, c] : coords_) s.push_back(i);
    return s;
}

PthRootCoord FinVec::coord(std::int64_t i) const {
    auto it = coords_.find(i);
    if (it == coords_.end()) return PthRootCoord(Rational(0), Rational(1), q_);
    return it->second;
}

void FinVec::set(std::int64_t i, const Rational& c) { set(i, PthRootCoord(c, Rational(1), q_)); }

void FinVec::set(std::int64_t i, const PthRootCoord& c) {
    if (i < 1) throw std::invalid_argument("FinVec: indices are positive integers");
    if (c.q() != q_) throw std::invalid_argument("FinVec: coordinate q mismatch");
    if (c.is_zero()) {
        coords_.erase(i);
    } else {
        coords_.insert_or_assign(i, c);
    }
}

FinVec FinVec::restrict_to(std::int64_t lo, std::int64_t hi) const {
    FinVec out(q_, dual_);
    for (auto it = coords_.lower_bound(lo); it != coords_.end() && it->first <= hi; ++it) {
        out.coords_.insert(*it);
    }
    return out;
}

FinVec FinVec::scale(const Rational& c) const {
    FinVec out(q_, dual_);
    if (c.is_zero()) return out;
    for (const auto& [i, v] : coords_) out.coords_.emplace(i, v.scale(c));
    return out;
}

FinVec FinVec::scale(const PthRootCoord& c) const {
    FinVec out(q_, dual_);
    if (c.is_zero()) return out;
    for (const auto& [i, v] : coords_) out.coords_.emplace(i, v * c);
    return out;
}

FinVec FinVec::flip_signs(const std::vector<int>& signs) const {
    if (signs.size() != coords_.size())
        throw std::invalid_argument("FinVec::flip_signs: one sign per support point");
    FinVec out(q_, dual_);
    std::size_t k = 0;
    for (const auto& [i, v] : coords_) {
        out.coords_.emplace(i, signs[k++] < 0 ? v.negate() : v);
    }
    return out;
}

FinVec operator+(const FinVec& a, const FinVec& b) {
    if (a.q_ != b.q_) throw std::invalid_argument("FinVec: q mismatch in sum");
    FinVec out = a;
    for (const auto& [i, v] : b.coords_) {
        auto it = out.coords_.find(i);
        if (it == out.coords_.end()) {
            out.coords_.emplace(i, v);
        } else {
            auto sum = it->second.add_same_base(v);
            if (!sum) throw std::invalid_argument("FinVec: incompatible radical bases in sum");
            if (sum->is_zero()) {
                out.coords_.erase(it);
            } else {
                it->second = *sum;
            }
        }
    }
    return out;
}

bool operator==(const FinVec& a, const FinVec& b) {
    if (a.q_ != b.q_ || a.coords_.size() != b.coords_.size()) return false;
    auto ia = a.coords_.begin();
    auto ib = b.coords_.begin();
    for (; ia != a.coords_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        const PthRootCoord &x = ia->second, &y = ib->second;
        if (x.sign() != y.sign()) return false;
        if (!(x.abs_qth_power() == y.abs_qth_power())) return false;
    }
    return true;
}

}  // namespace aslab
