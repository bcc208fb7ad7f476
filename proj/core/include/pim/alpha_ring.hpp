#pragma once

#include "pim/scalar.hpp"

namespace pim {

// Element c0 + c1*beta of Q(f)[beta]/(beta^2 - a_p beta + p^{2k-1}), where f has
// weight 2k and beta = p^{(2k-1)/2} alpha_p is the integral root attached to the
// Satake parameter alpha_p.  Keeps every intermediate free of formal sqrt(p).
class AlphaElem {
public:
    AlphaElem(Scalar c0, Scalar c1, long p, unsigned k, Scalar ap)
        : c0_(std::move(c0)), c1_(std::move(c1)), p_(p), k_(k), ap_(std::move(ap)) {
        norm_ = Scalar(Rat(pow_int(p, 2 * k - 1)));
    }
    static AlphaElem constant(Scalar c, long p, unsigned k, Scalar ap) {
        return AlphaElem(std::move(c), Scalar(0), p, k, std::move(ap));
    }
    static AlphaElem beta(long p, unsigned k, Scalar ap) {
        return AlphaElem(Scalar(0), Scalar(1), p, k, std::move(ap));
    }

    const Scalar& c0() const { return c0_; }
    const Scalar& c1() const { return c1_; }
    long p() const { return p_; }
    unsigned k() const { return k_; }
    const Scalar& ap() const { return ap_; }

    friend AlphaElem operator+(const AlphaElem& x, const AlphaElem& y) {
        x.check(y, "+");
        return AlphaElem(x.c0_ + y.c0_, x.c1_ + y.c1_, x.p_, x.k_, x.ap_);
    }
    friend AlphaElem operator-(const AlphaElem& x, const AlphaElem& y) {
        x.check(y, "-");
        return AlphaElem(x.c0_ - y.c0_, x.c1_ - y.c1_, x.p_, x.k_, x.ap_);
    }
    friend AlphaElem operator*(const AlphaElem& x, const AlphaElem& y) {
        x.check(y, "*");
        // beta^2 = ap*beta - p^{2k-1}
        Scalar t = x.c1_ * y.c1_;
        return AlphaElem(x.c0_ * y.c0_ - t * x.norm_, x.c0_ * y.c1_ + x.c1_ * y.c0_ + t * x.ap_,
                         x.p_, x.k_, x.ap_);
    }
    friend AlphaElem operator*(const Scalar& s, const AlphaElem& y) {
        return AlphaElem(s * y.c0_, s * y.c1_, y.p_, y.k_, y.ap_);
    }

    AlphaElem pow(unsigned long e) const {
        AlphaElem r = constant(Scalar(1), p_, k_, ap_);
        AlphaElem base(*this);
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    // The root swap beta -> ap - beta (alpha_p <-> alpha_p^{-1}).
    AlphaElem conj_root() const { return AlphaElem(c0_ + c1_ * ap_, -c1_, p_, k_, ap_); }

private:
    void check(const AlphaElem& y, const char* op) const {
        if (p_ != y.p_ || k_ != y.k_ || !(ap_ == y.ap_))
            throw FieldMismatch(std::string("AlphaElem ") + op + " across different (p,k,a_p)");
    }

    Scalar c0_, c1_;
    long p_;
    unsigned k_;
    Scalar ap_;
    Scalar norm_;  // p^{2k-1}
};

// A completed local Ikeda factor must be beta-free; extract its Q(f) value.
inline Scalar alpha_symmetrize(const AlphaElem& e) {
    if (!e.c1().is_zero())
        throw NonRationalLocalFactor("beta-coefficient " + e.c1().str() + " at p=" +
                                     std::to_string(e.p()));
    return e.c0();
}

}  // namespace pim
