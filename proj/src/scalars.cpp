#include "k4/scalars.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace k4 {

GRat::GRat(long num, long den) : re_(num, den), im_(0) {
    if (den == 0) throw std::domain_error("GRat: zero denominator");
    canon();
}

GRat GRat::inv() const {
    if (is_zero()) throw std::domain_error("GRat: division by zero");
    mpq_class n = norm();
    return GRat(re_ / n, -im_ / n);
}

GRat GRat::operator/(const GRat& o) const {
    return *this * o.inv();
}

std::string GRat::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re_ != 0) out += re_.get_str();
    if (im_ != 0) {
        if (im_ > 0 && !out.empty()) out += "+";
        out += im_.get_str();
        out += "*i";
    }
    return out;
}

namespace {

// Reads one signed term starting at pos; returns the rational magnitude and
// whether the term is imaginary. Advances pos past the term.
struct Term {
    mpq_class value;
    bool imaginary;
};

Term read_term(const std::string& s, size_t& pos) {
    Term t{mpq_class(0), false};
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = (s[pos] == '-');
        ++pos;
    }
    if (pos >= s.size()) throw std::invalid_argument("GRat: truncated term");
    if (s[pos] == 'i') {
        ++pos;
        t.value = neg ? -1 : 1;
        t.imaginary = true;
        return t;
    }
    size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
        ++pos;
    if (pos == start) throw std::invalid_argument("GRat: expected number");
    mpq_class q;
    if (q.set_str(s.substr(start, pos - start), 10) != 0)
        throw std::invalid_argument("GRat: bad rational");
    q.canonicalize();
    t.value = neg ? mpq_class(-q) : q;
    if (pos + 1 < s.size() && s[pos] == '*' && s[pos + 1] == 'i') {
        pos += 2;
        t.imaginary = true;
    } else if (pos < s.size() && s[pos] == 'i') {
        ++pos;
        t.imaginary = true;
    }
    return t;
}

} // namespace

GRat GRat::parse(const std::string& s) {
    std::string in;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) in += c;
    if (in.empty()) throw std::invalid_argument("GRat: empty string");
    size_t pos = 0;
    mpq_class re(0), im(0);
    bool have_re = false, have_im = false;
    while (pos < in.size()) {
        Term t = read_term(in, pos);
        if (t.imaginary) {
            if (have_im) throw std::invalid_argument("GRat: duplicate imaginary term");
            im = t.value;
            have_im = true;
        } else {
            if (have_re) throw std::invalid_argument("GRat: duplicate real term");
            re = t.value;
            have_re = true;
        }
    }
    return GRat(re, im);
}

std::ostream& operator<<(std::ostream& os, const GRat& x) {
    return os << x.str();
}

} // namespace k4
