#include "nccurv/freealg.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace nccurv {

Word word_transpose(const Word& w) {
    Word r(w.rbegin(), w.rend());
    return r;
}

void NcPoly::add_term(const Word& w, double c) {
    if (c == 0.0) return;
    for (const Letter& l : w)
        if (l.index < 1 || l.index > g_)
            throw std::invalid_argument("NcPoly: letter index out of range");
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0.0) terms_.erase(it);
    }
}

NcPoly& NcPoly::operator+=(const NcPoly& q) {
    check_same_g(q);
    for (const auto& [w, c] : q.terms_) add_term(w, c);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& q) {
    check_same_g(q);
    for (const auto& [w, c] : q.terms_) add_term(w, -c);
    return *this;
}

NcPoly& NcPoly::operator*=(double s) {
    if (s == 0.0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
}

NcPoly operator*(const NcPoly& p, const NcPoly& q) {
    p.check_same_g(q);
    NcPoly r(p.g_);
    for (const auto& [wp, cp] : p.terms_)
        for (const auto& [wq, cq] : q.terms_) {
            Word w = wp;
            w.insert(w.end(), wq.begin(), wq.end());
            r.add_term(w, cp * cq);
        }
    return r;
}

NcPoly NcPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("NcPoly::pow: negative exponent");
    NcPoly r = NcPoly::constant(g_, 1.0);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

NcPoly NcPoly::transpose() const {
    NcPoly r(g_);
    for (const auto& [w, c] : terms_) r.add_term(word_transpose(w), c);
    return r;
}

int NcPoly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.rbegin()->first.size());
}

DegreeProfile NcPoly::profile() const {
    DegreeProfile d{-1, -1, -1, -1, true, is_symmetric()};
    int first_h = -1;
    for (const auto& [w, c] : terms_) {
        int nx = 0, nh = 0, nk = 0;
        for (const Letter& l : w) {
            if (l.cls == LetterClass::X)
                ++nx;
            else if (l.cls == LetterClass::H)
                ++nh;
            else
                ++nk;
        }
        d.degree = std::max(d.degree, static_cast<int>(w.size()));
        d.x_degree = std::max(d.x_degree, nx);
        d.h_degree = std::max(d.h_degree, nh);
        d.k_degree = std::max(d.k_degree, nk);
        if (first_h < 0) first_h = nh;
        if (nh != first_h) d.h_homogeneous = false;
    }
    return d;
}

double NcPoly::max_coeff_diff(const NcPoly& q) const {
    double m = 0.0;
    for (const auto& [w, c] : terms_) m = std::max(m, std::abs(c - q.coefficient(w)));
    for (const auto& [w, c] : q.terms_) m = std::max(m, std::abs(c - coefficient(w)));
    return m;
}

namespace {

std::string fmt_coeff(double c) {
    if (c == std::floor(c) && std::abs(c) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.0f", c);
        return buf;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", c);
    return buf;
}

char class_char(LetterClass c) {
    switch (c) {
        case LetterClass::X: return 'x';
        case LetterClass::H: return 'h';
        default: return 'k';
    }
}

}  // namespace

std::string word_to_string(const Word& w) {
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!first) os << '*';
        first = false;
        os << class_char(w[i].cls) << w[i].index;
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    return os.str();
}

std::string NcPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        double coeff = c;
        if (first) {
            if (coeff < 0) {
                os << "-";
                coeff = -coeff;
            }
        } else {
            os << (coeff < 0 ? " - " : " + ");
            coeff = std::abs(coeff);
        }
        first = false;
        if (w.empty()) {
            os << fmt_coeff(coeff);
        } else {
            if (coeff != 1.0) os << fmt_coeff(coeff) << '*';
            os << word_to_string(w);
        }
    }
    return os.str();
}

NcPoly rename_class(const NcPoly& p, LetterClass from, LetterClass to) {
    NcPoly r(p.g());
    for (const auto& [w, c] : p.terms()) {
        Word nw = w;
        for (Letter& l : nw)
            if (l.cls == from) l.cls = to;
        r.add_term(nw, c);
    }
    return r;
}

namespace {

class Parser {
public:
    Parser(const std::string& text, int g, bool allow_h) : s_(text), g_(g), allow_h_(allow_h) {}

    NcPoly parse() {
        NcPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
    int g_;
    bool allow_h_;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NcPoly expr() {
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        NcPoly p = term();
        if (neg) p *= -1.0;
        for (;;) {
            if (accept('+'))
                p += term();
            else if (accept('-'))
                p -= term();
            else
                break;
        }
        return p;
    }

    NcPoly term() {
        NcPoly p = factor();
        while (accept('*')) p = p * factor();
        return p;
    }

    NcPoly factor() {
        NcPoly p = atom();
        for (;;) {
            if (accept('^')) {
                p = p.pow(uint_lit());
            } else if (accept('\'')) {
                p = p.transpose();
            } else {
                break;
            }
        }
        return p;
    }

    int uint_lit() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected unsigned integer", pos_);
        return std::stoi(s_.substr(start, pos_ - start));
    }

    NcPoly atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            NcPoly p = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return p;
        }
        if (c == 'x' || c == 'h') {
            const size_t at = pos_;
            ++pos_;
            const int idx = uint_lit();
            if (idx < 1 || idx > g_) throw ParseError("variable index out of range", at);
            if (c == 'h' && !allow_h_) throw ParseError("h-letters not enabled here", at);
            return NcPoly::letter(g_, c == 'x' ? LetterClass::X : LetterClass::H, idx);
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            skip_ws();
            size_t idx = 0;
            double v;
            try {
                v = std::stod(s_.substr(pos_), &idx);
            } catch (const std::exception&) {
                throw ParseError("malformed number", pos_);
            }
            pos_ += idx;
            return NcPoly::constant(g_, v);
        }
        throw ParseError("unexpected character", pos_);
    }
};

}  // namespace

NcPoly parse_poly(const std::string& text, int g, bool allow_h) {
    return Parser(text, g, allow_h).parse();
}

}  // namespace nccurv
