#ifndef FWBESOV_BESOV_HPP
#define FWBESOV_BESOV_HPP

#include "fwbesov/dyadic.hpp"

#include <optional>

namespace fwbesov {

/// Summability index r in [1, inf]; infinity is a distinct state, never a
/// sentinel float.
class Summability {
public:
    static Summability finite(double r) {
        if (!(r >= 1.0))
            throw std::invalid_argument("Summability: r must be >= 1");
        return Summability(r);
    }
    static Summability infinity() { return Summability(std::nullopt); }

    bool is_infinite() const { return !r_.has_value(); }
    double value() const {
        if (!r_) throw std::logic_error("Summability: value() on r = inf");
        return *r_;
    }

    friend bool operator==(const Summability& a, const Summability& b) {
        return a.r_ == b.r_;
    }

private:
    explicit Summability(std::optional<double> r) : r_(r) {}
    std::optional<double> r_;
};

/// Exponent pair (s, r) selecting the norm B^s_{2,r}.
struct BesovParams {
    double s = 2.0;
    Summability r = Summability::finite(2.0);

    /// Range where Theorem-style well-posedness applies: s > 3/2 with
    /// 1 < r < inf, or s >= 3/2 with r = 1.
    bool wellposed_regime() const {
        if (r.is_infinite()) return false;
        if (r.value() == 1.0) return s >= 1.5;
        return s > 1.5 && r.value() > 1.0;
    }
};

/// The Besov norm: ( sum_q (2^{sq} ||Delta_q u||_{L2})^r )^{1/r}, with the
/// sup over q when r = inf. The q-sum runs -1 .. q_max(grid).
double besov_norm(const DyadicSystem& sys, const SpectralField& u, const BesovParams& params);

double besov_norm(const DyadicSystem& sys, const SpectralField& u, double s, Summability r);

/// Sobolev norm via Parseval: ( sum_k (1+kappa^2)^s |coeff|^2 L )^{1/2}.
/// Oracle for the B^s_{2,2} ~ H^s equivalence.
double sobolev_norm(const SpectralField& u, double s);

} // namespace fwbesov

#endif
