#include "k4/enveloping.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace k4 {

const char* const kWNames[4] = {"w11", "w21", "w12", "w22"};

namespace {

// Coefficient of Theta in the anticommutator {w_i, w_j}.
int anti(int i, int j) {
    if ((i == 0 && j == 3) || (i == 3 && j == 0)) return 4;
    if ((i == 1 && j == 2) || (i == 2 && j == 1)) return -4;
    return 0;
}

} // namespace

int PBWMono::degree() const {
    return 2 * theta + std::popcount(mask);
}

int PBWMono::parity() const {
    return std::popcount(mask) % 2;
}

std::string PBWMono::str() const {
    std::string out;
    if (theta > 0) out = "Th^" + std::to_string(theta);
    for (int i = 0; i < 4; ++i) {
        if (!(mask & (1u << i))) continue;
        if (!out.empty()) out += " ";
        out += kWNames[i];
    }
    if (out.empty()) out = "1";
    return out;
}

PBWMono PBWMono::parse(const std::string& s) {
    PBWMono mono;
    std::istringstream is(s);
    std::string tok;
    bool any = false;
    int last = -1;
    while (is >> tok) {
        any = true;
        if (tok == "1") continue;
        if (tok.compare(0, 3, "Th^") == 0) {
            mono.theta = std::stoi(tok.substr(3));
            continue;
        }
        int idx = -1;
        for (int i = 0; i < 4; ++i)
            if (tok == kWNames[i]) idx = i;
        if (idx < 0 || idx <= last)
            throw std::invalid_argument("PBWMono: bad or unordered letter");
        last = idx;
        mono.mask |= 1u << idx;
    }
    if (!any) throw std::invalid_argument("PBWMono: empty");
    return mono;
}

UElt UElt::mono(int theta, unsigned mask, const GRat& c) {
    UElt e;
    e.add_term(PBWMono{theta, mask}, c);
    return e;
}

void UElt::add_term(const PBWMono& mono, const GRat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

UElt UElt::operator+(const UElt& o) const {
    UElt r = *this;
    for (const auto& [mono, c] : o.terms_) r.add_term(mono, c);
    return r;
}

UElt UElt::operator*(const GRat& s) const {
    UElt r;
    if (s.is_zero()) return r;
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, c * s);
    return r;
}

std::string UElt::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")*" << mono.str();
        first = false;
    }
    return os.str();
}

namespace {

// Left-multiplies the letter l into a straightened letter word.
UElt left_mul_letter(int l, unsigned mask, bool gr) {
    if (mask == 0) return UElt::mono(0, 1u << l);
    int b = std::countr_zero(mask);
    unsigned rest = mask & (mask - 1);
    if (l < b) return UElt::mono(0, mask | (1u << l));
    if (l == b) return UElt(); // w^2 = 0 in both products
    UElt out;
    if (!gr) {
        int a = anti(l, b);
        if (a != 0) out += UElt::mono(1, rest, GRat(a));
    }
    UElt tail = left_mul_letter(l, rest, gr);
    for (const auto& [mono, c] : tail.terms())
        out += UElt::mono(mono.theta, mono.mask | (1u << b), -c);
    return out;
}

} // namespace

UElt pbw_multiply(const UElt& a, const UElt& b, bool gr) {
    UElt out;
    for (const auto& [am, ac] : a.terms()) {
        for (const auto& [bm, bc] : b.terms()) {
            UElt acc = UElt::mono(0, bm.mask);
            for (int l = 3; l >= 0; --l) {
                if (!(am.mask & (1u << l))) continue;
                UElt next;
                for (const auto& [mono, c] : acc.terms()) {
                    UElt prod = left_mul_letter(l, mono.mask, gr);
                    for (const auto& [pm, pc] : prod.terms())
                        next.add_term(PBWMono{mono.theta + pm.theta, pm.mask}, c * pc);
                }
                acc = next;
            }
            for (const auto& [mono, c] : acc.terms())
                out.add_term(PBWMono{mono.theta + am.theta + bm.theta, mono.mask}, c * ac * bc);
        }
    }
    return out;
}

UElt w_letter(int idx) {
    return UElt::mono(0, 1u << idx);
}

UElt eta(int i) {
    GRat ih = GRat::i() * GRat(1, 2);
    GRat h = GRat(1, 2);
    switch (i) {
    case 1: return w_letter(0) * (-ih) + w_letter(3) * ih;
    case 2: return w_letter(0) * h + w_letter(3) * h;
    case 3: return w_letter(2) * (-ih) + w_letter(1) * (-ih);
    case 4: return w_letter(1) * h + w_letter(2) * (-h);
    default: throw std::invalid_argument("eta: index out of range");
    }
}

UElt negative_to_u(const ContactElt& g) {
    if (!g.c_part().is_zero())
        throw std::invalid_argument("negative_to_u: central part present");
    UElt out;
    for (const auto& [mono, c] : g.terms()) {
        if (mono.m == 0 && mono.mask == 0) {
            out += UElt::mono(1, 0, c * GRat(-2));
        } else if (mono.m == 0 && std::popcount(mono.mask) == 1) {
            out += eta(std::countr_zero(mono.mask) + 1) * c;
        } else {
            throw std::invalid_argument("negative_to_u: not a g_{<0} element");
        }
    }
    return out;
}

std::vector<PBWMono> pbw_basis(int degree) {
    std::vector<PBWMono> out;
    for (int k = 0; 2 * k <= degree; ++k) {
        for (unsigned mask = 0; mask < 16; ++mask)
            if (2 * k + std::popcount(mask) == degree) out.push_back(PBWMono{k, mask});
    }
    return out;
}

} // namespace k4
