#ifndef LATPICK_FAREY_HPP
#define LATPICK_FAREY_HPP

#include <compare>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arithmetic.hpp"
#include "error.hpp"
#include "lattice_core.hpp"

namespace latpick {

/** Reduced fraction in [0,1]. */
class Fraction {
public:
    Fraction(integer num,integer den) : num_(num), den_(den) {
        if(den <= 0 || num < 0 || num > den)
            throw error(errc::invalid_argument,
                std::to_string(num) + "/" + std::to_string(den) + " is not a proper non-negative fraction");
        if(gcd(num,den) != 1)
            throw error(errc::invalid_argument,std::to_string(num) + "/" + std::to_string(den) + " is not reduced");
    }

    integer num() const noexcept { return num_; }
    integer den() const noexcept { return den_; }

    friend bool operator==(const Fraction&,const Fraction&) = default;
    friend std::strong_ordering operator<=>(const Fraction &l,const Fraction &r) {
        return wide_integer(l.num_)*r.den_ <=> wide_integer(r.num_)*l.den_;
    }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }
    friend std::ostream &operator<<(std::ostream &os,const Fraction &f) { return os << f.str(); }

private:
    integer num_;
    integer den_;
};

inline constexpr integer max_farey_order = 1'000'000;

/** Streams F_n in ascending order using the neighbour recurrence: from
consecutive a/b < c/d the next term is (kc - a)/(kd - b) with
k = floor((n + b)/d). Constant memory. */
class FareyGenerator {
public:
    explicit FareyGenerator(integer n) : n_(n), a_(0), b_(1), c_(1), d_(n) {
        if(n < 1) throw error(errc::invalid_argument,"Farey order must be at least 1");
        if(n > max_farey_order) throw error(errc::too_large,"Farey order above 1e6 is refused");
    }

    std::optional<Fraction> next() {
        if(done_) return std::nullopt;
        if(!started_) {
            started_ = true;
            return Fraction(0,1);
        }
        Fraction out(c_,d_);
        if(c_ == d_) {
            done_ = true;
            return out;
        }
        integer k = (n_ + b_) / d_;
        integer e = k*c_ - a_, f = k*d_ - b_;
        a_ = c_; b_ = d_; c_ = e; d_ = f;
        return out;
    }

private:
    integer n_, a_, b_, c_, d_;
    bool started_ = false;
    bool done_ = false;
};

inline std::vector<Fraction> farey_sequence(integer n) {
    FareyGenerator gen(n);
    std::vector<Fraction> out;
    while(auto f = gen.next()) out.push_back(*f);
    return out;
}

/** True iff every consecutive a/b, c/d satisfies bc - ad = 1. */
inline bool verify_neighbors(std::span<const Fraction> seq) {
    for(std::size_t i = 0; i + 1 < seq.size(); ++i) {
        const Fraction &l = seq[i], &r = seq[i + 1];
        if(wide_integer(l.den())*r.num() - wide_integer(l.num())*r.den() != 1) return false;
    }
    return true;
}

inline Fraction mediant(const Fraction &a,const Fraction &b) {
    if(!(a < b)) throw error(errc::not_ordered,"mediant needs " + a.str() + " < " + b.str());
    integer num = a.num() + b.num(), den = a.den() + b.den();
    integer g = gcd(num,den);
    return {num / g,den / g};
}

/** Farey neighbours a/b < c/d give the lattice vectors (b,a) and (d,c),
whose determinant is 1: a primitive cell. */
inline std::pair<LatticeVector,LatticeVector> neighbor_to_cell(const Fraction &a,const Fraction &b) {
    if(wide_integer(a.den())*b.num() - wide_integer(a.num())*b.den() != 1)
        throw error(errc::not_neighbors,a.str() + " and " + b.str() + " are not Farey neighbours");
    return {{a.den(),a.num()},{b.den(),b.num()}};
}

} // namespace latpick

#endif
