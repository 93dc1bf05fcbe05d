#ifndef K4_SCALARS_HPP
#define K4_SCALARS_HPP

#include <gmpxx.h>
#include <iosfwd>
#include <string>

namespace k4 {

// Element of Q(i), the field of Gaussian rationals. Values are immutable in
// spirit: all operations return new values and components are kept in GMP
// canonical (reduced) form.
class GRat {
public:
    GRat() : re_(0), im_(0) {}
    GRat(long n) : re_(n), im_(0) {}
    GRat(long num, long den);
    explicit GRat(const mpq_class& re) : re_(re), im_(0) { canon(); }
    GRat(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) { canon(); }

    static GRat i() { return GRat(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GRat operator-() const { return GRat(-re_, -im_); }
    GRat operator+(const GRat& o) const { return GRat(re_ + o.re_, im_ + o.im_); }
    GRat operator-(const GRat& o) const { return GRat(re_ - o.re_, im_ - o.im_); }
    GRat operator*(const GRat& o) const {
        return GRat(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    GRat operator/(const GRat& o) const;

    GRat& operator+=(const GRat& o) { *this = *this + o; return *this; }
    GRat& operator-=(const GRat& o) { *this = *this - o; return *this; }
    GRat& operator*=(const GRat& o) { *this = *this * o; return *this; }
    GRat& operator/=(const GRat& o) { *this = *this / o; return *this; }

    bool operator==(const GRat& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GRat& o) const { return !(*this == o); }

    GRat conj() const { return GRat(re_, -im_); }
    // Square of the absolute value, an ordinary rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GRat inv() const;

    // Canonical text form "a/b+c/d*i" with optional parts; see parse().
    std::string str() const;

    // Parses the canonical form: an optional real term and an optional
    // imaginary term ("c/d*i" or just "i"/"-i") joined by a sign, in either
    // order. Throws std::invalid_argument on malformed input.
    static GRat parse(const std::string& s);

private:
    void canon() { re_.canonicalize(); im_.canonicalize(); }
    mpq_class re_, im_;
};

std::ostream& operator<<(std::ostream& os, const GRat& x);

} // namespace k4

#endif
