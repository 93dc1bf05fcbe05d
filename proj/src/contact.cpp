#include "k4/contact.hpp"
#include "k4/linalg.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace k4 {

int CMono::xi_count() const {
    return std::popcount(mask);
}

int grassmann_sign(unsigned a, unsigned b) {
    if (a & b) return 0;
    int inv = 0;
    for (int j = 0; j < 4; ++j) {
        if (!(b & (1u << j))) continue;
        inv += std::popcount(a >> (j + 1));
    }
    return (inv % 2 == 0) ? 1 : -1;
}

int xi_derivative(unsigned mask, int i, unsigned& out) {
    unsigned bit = 1u << (i - 1);
    if (!(mask & bit)) return 0;
    out = mask ^ bit;
    int below = std::popcount(mask & (bit - 1));
    return (below % 2 == 0) ? 1 : -1;
}

std::string CMono::str() const {
    std::string out;
    if (m > 0) out = "t^" + std::to_string(m);
    if (mask != 0) {
        if (!out.empty()) out += " ";
        out += "xi{";
        bool first = true;
        for (int i = 1; i <= 4; ++i) {
            if (!(mask & (1u << (i - 1)))) continue;
            if (!first) out += ",";
            out += std::to_string(i);
            first = false;
        }
        out += "}";
    }
    if (out.empty()) out = "1";
    return out;
}

CMono CMono::parse(const std::string& s) {
    CMono mono;
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < s.size() && s[pos] == ' ') ++pos; };
    skip_ws();
    if (pos < s.size() && s[pos] == '1' && s.find_first_not_of(" ", pos + 1) == std::string::npos)
        return mono;
    if (pos < s.size() && s[pos] == 't') {
        ++pos;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) throw std::invalid_argument("CMono: bad exponent");
            mono.m = std::stoi(s.substr(start, pos - start));
        } else {
            mono.m = 1;
        }
        skip_ws();
    }
    if (pos < s.size() && s.compare(pos, 3, "xi{") == 0) {
        pos += 3;
        while (pos < s.size() && s[pos] != '}') {
            if (s[pos] == ',') { ++pos; continue; }
            if (s[pos] < '1' || s[pos] > '4')
                throw std::invalid_argument("CMono: bad xi index");
            mono.mask |= 1u << (s[pos] - '1');
            ++pos;
        }
        if (pos >= s.size()) throw std::invalid_argument("CMono: missing }");
        ++pos;
        skip_ws();
    }
    if (pos != s.size()) throw std::invalid_argument("CMono: trailing input");
    return mono;
}

ContactElt ContactElt::mono(int m, unsigned mask, const GRat& c) {
    ContactElt e;
    e.add_term(CMono{m, mask}, c);
    return e;
}

ContactElt ContactElt::central(const GRat& c) {
    ContactElt e;
    e.c_ = c;
    return e;
}

void ContactElt::add_term(const CMono& mono, const GRat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ContactElt ContactElt::operator+(const ContactElt& o) const {
    ContactElt r = *this;
    for (const auto& [mono, c] : o.terms_) r.add_term(mono, c);
    r.c_ += o.c_;
    return r;
}

ContactElt ContactElt::operator-(const ContactElt& o) const {
    return *this + o * GRat(-1);
}

ContactElt ContactElt::operator*(const GRat& s) const {
    ContactElt r;
    if (s.is_zero()) return r;
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, c * s);
    r.c_ = c_ * s;
    return r;
}

bool ContactElt::homogeneous_of_degree(int d) const {
    for (const auto& [mono, c] : terms_)
        if (mono.degree() != d) return false;
    if (!c_.is_zero() && d != 0) return false;
    return true;
}

bool ContactElt::homogeneous_of_parity(int p) const {
    for (const auto& [mono, c] : terms_)
        if (mono.parity() != p) return false;
    if (!c_.is_zero() && p != 0) return false;
    return true;
}

std::string ContactElt::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")*" << mono.str();
        first = false;
    }
    if (!c_.is_zero()) {
        if (!first) os << " + ";
        os << "(" << c_.str() << ")*C";
    }
    return os.str();
}

ContactElt ContactElt::parse(const std::string& s) {
    ContactElt e;
    if (s == "0") return e;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t plus = s.find(" + ", pos);
        std::string term = s.substr(pos, plus == std::string::npos ? plus : plus - pos);
        pos = (plus == std::string::npos) ? s.size() : plus + 3;
        size_t open = term.find('(');
        size_t close = term.find(')');
        size_t star = term.find('*', close);
        if (open != 0 || close == std::string::npos || star == std::string::npos)
            throw std::invalid_argument("ContactElt: bad term");
        GRat c = GRat::parse(term.substr(1, close - 1));
        std::string mono = term.substr(star + 1);
        if (mono == "C")
            e.c_ += c;
        else
            e.add_term(CMono::parse(mono), c);
    }
    return e;
}

GRat psi_cocycle(const CMono& f, const CMono& g) {
    if (f.m != 0 || g.m != 0) return GRat(0);
    struct Entry { unsigned a, b; int v; };
    static const Entry table[] = {
        {0x0, 0xF, -2}, {0xF, 0x0, 2},
        {0x1, 0xE, -1}, {0xE, 0x1, -1},
        {0x2, 0xD, 1},  {0xD, 0x2, 1},
        {0x4, 0xB, -1}, {0xB, 0x4, -1},
        {0x8, 0x7, 1},  {0x7, 0x8, 1},
    };
    for (const Entry& e : table)
        if (e.a == f.mask && e.b == g.mask) return GRat(e.v);
    return GRat(0);
}

namespace {

// Bracket of two basis monomials, by the contact bracket formula plus the
// cocycle. Uses that sum_i xi_i d_i f = |I_f| f on monomials.
ContactElt bracket_mono(const CMono& f, const CMono& g) {
    ContactElt out;
    int kf = f.xi_count(), kg = g.xi_count();
    // (2 - |I_f|) f dt(g)
    if (g.m > 0) {
        int sgn = grassmann_sign(f.mask, g.mask);
        if (sgn != 0)
            out.add_term(CMono{f.m + g.m - 1, f.mask | g.mask},
                         GRat((2 - kf) * g.m * sgn));
    }
    // - dt(f) (2 - |I_g|) g
    if (f.m > 0) {
        int sgn = grassmann_sign(f.mask, g.mask);
        if (sgn != 0)
            out.add_term(CMono{f.m + g.m - 1, f.mask | g.mask},
                         GRat(-(2 - kg) * f.m * sgn));
    }
    // (-1)^{p(f)} sum_i (d_i f)(d_i g)
    int pf = (kf % 2 == 0) ? 1 : -1;
    for (int i = 1; i <= 4; ++i) {
        unsigned fm, gm;
        int sf = xi_derivative(f.mask, i, fm);
        if (sf == 0) continue;
        int sg = xi_derivative(g.mask, i, gm);
        if (sg == 0) continue;
        int sw = grassmann_sign(fm, gm);
        if (sw == 0) continue;
        out.add_term(CMono{f.m + g.m, fm | gm}, GRat(pf * sf * sg * sw));
    }
    GRat psi = psi_cocycle(f, g);
    if (!psi.is_zero()) out.set_c(out.c_part() + psi);
    return out;
}

} // namespace

ContactElt contact_bracket(const ContactElt& a, const ContactElt& b) {
    ContactElt out;
    for (const auto& [fm, fc] : a.terms())
        for (const auto& [gm, gc] : b.terms())
            out += bracket_mono(fm, gm) * (fc * gc);
    return out;
}

namespace elems {

namespace {
const unsigned M12 = 0x3, M13 = 0x5, M14 = 0x9, M23 = 0x6, M24 = 0xA, M34 = 0xC;
GRat half() { return GRat(1, 2); }
GRat ihalf() { return GRat::i() * GRat(1, 2); }
} // namespace

ContactElt hx() {
    return ContactElt::mono(0, M12, -GRat::i()) + ContactElt::mono(0, M34, GRat::i());
}
ContactElt hy() {
    return ContactElt::mono(0, M12, -GRat::i()) + ContactElt::mono(0, M34, -GRat::i());
}
ContactElt ex() {
    return ContactElt::mono(0, M13, -half()) + ContactElt::mono(0, M24, -half()) +
           ContactElt::mono(0, M14, -ihalf()) + ContactElt::mono(0, M23, ihalf());
}
ContactElt ey() {
    return ContactElt::mono(0, M13, -half()) + ContactElt::mono(0, M24, half()) +
           ContactElt::mono(0, M14, ihalf()) + ContactElt::mono(0, M23, ihalf());
}
ContactElt fx() {
    return ContactElt::mono(0, M13, half()) + ContactElt::mono(0, M24, half()) +
           ContactElt::mono(0, M14, -ihalf()) + ContactElt::mono(0, M23, ihalf());
}
ContactElt fy() {
    return ContactElt::mono(0, M13, half()) + ContactElt::mono(0, M24, -half()) +
           ContactElt::mono(0, M14, ihalf()) + ContactElt::mono(0, M23, ihalf());
}
ContactElt e1() { return ex() + ey(); }
ContactElt e2() { return ex() - ey(); }
ContactElt theta() { return ContactElt::mono(0, 0, GRat(-1, 2)); }
ContactElt t() { return ContactElt::mono(1, 0); }
ContactElt C() { return ContactElt::central(); }
ContactElt xi(int i) { return ContactElt::mono(0, 1u << (i - 1)); }
ContactElt g1_lowest_even() {
    return ContactElt::mono(1, 0x1) + ContactElt::mono(1, 0x2, GRat::i());
}
ContactElt g1_lowest_odd() {
    return ContactElt::mono(0, 0xD) + ContactElt::mono(0, 0xE, GRat::i());
}

std::vector<ContactElt> g1_basis() {
    std::vector<ContactElt> out;
    for (int i = 1; i <= 4; ++i) out.push_back(ContactElt::mono(1, 1u << (i - 1)));
    for (unsigned mask : {0x7u, 0xBu, 0xDu, 0xEu}) out.push_back(ContactElt::mono(0, mask));
    return out;
}

std::vector<ContactElt> g0_basis() {
    std::vector<ContactElt> out;
    for (unsigned mask : {M12, M13, M23, M14, M24, M34}) out.push_back(ContactElt::mono(0, mask));
    out.push_back(t());
    out.push_back(C());
    return out;
}

std::vector<ContactElt> gm1_basis() {
    std::vector<ContactElt> out;
    for (int i = 1; i <= 4; ++i) out.push_back(xi(i));
    return out;
}

} // namespace elems

G0Decomp decompose_g0(const ContactElt& g) {
    static const unsigned order[6] = {0x3, 0x5, 0x6, 0x9, 0xA, 0xC};
    auto coords = [](const ContactElt& e) {
        std::vector<GRat> v(6);
        for (const auto& [mono, c] : e.terms()) {
            bool found = false;
            for (int k = 0; k < 6; ++k) {
                if (mono.m == 0 && mono.mask == order[k]) {
                    v[k] = c;
                    found = true;
                    break;
                }
            }
            if (!found && !(mono.m == 1 && mono.mask == 0))
                throw std::invalid_argument("decompose_g0: not a degree 0 element");
        }
        return v;
    };

    const ContactElt named[6] = {elems::hx(), elems::hy(), elems::ex(),
                                 elems::ey(), elems::fx(), elems::fy()};
    Matrix m(6, 6);
    for (int col = 0; col < 6; ++col) {
        std::vector<GRat> v = coords(named[col]);
        for (int row = 0; row < 6; ++row) m.at(row, col) = v[row];
    }
    std::vector<GRat> rhs = coords(g), x;
    if (!m.solve(rhs, x))
        throw std::runtime_error("decompose_g0: named elements do not span");

    G0Decomp d;
    d.c = g.c_part();
    auto it = g.terms().find(CMono{1, 0});
    d.t = (it != g.terms().end()) ? it->second : GRat(0);
    for (int k = 0; k < 6; ++k) d.named[k] = x[k];
    return d;
}

} // namespace k4
