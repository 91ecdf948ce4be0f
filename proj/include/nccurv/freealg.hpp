#ifndef NCCURV_FREEALG_HPP
#define NCCURV_FREEALG_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace nccurv {

/// Non-commuting symmetric letters. X-letters are the polynomial variables,
/// H-letters the derivative direction, K-letters the second direction used by
/// the mixed Hessian.
enum class LetterClass : std::uint8_t { X = 0, H = 1, K = 2 };

struct Letter {
    LetterClass cls;
    int index;  // 1-based, <= g

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Graded lexicographic order, letter order x1<...<xg<h1<...<hg<k1<...<kg.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

Word word_transpose(const Word& w);

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t position)
        : std::runtime_error(msg + " at position " + std::to_string(position)), pos(position) {}
    size_t pos;
};

struct DegreeProfile {
    int degree;    // -1 for the zero polynomial
    int x_degree;  // max x-letter count over words, -1 if zero
    int h_degree;  // max h-letter count over words, -1 if zero
    int k_degree;
    bool h_homogeneous;  // every word has the same h-letter count
    bool symmetric;
};

/// A real-coefficient polynomial over the free algebra on g symmetric letters
/// (plus the h/k classes). Immutable in spirit: operations return new values.
class NcPoly {
public:
    using TermMap = std::map<Word, double, WordLess>;

    explicit NcPoly(int g = 1) : g_(g) {
        if (g < 1) throw std::invalid_argument("NcPoly: g must be >= 1");
    }
    static NcPoly constant(int g, double c) {
        NcPoly p(g);
        p.add_term(Word{}, c);
        return p;
    }
    static NcPoly letter(int g, LetterClass cls, int index) {
        NcPoly p(g);
        p.add_term(Word{Letter{cls, index}}, 1.0);
        return p;
    }
    static NcPoly variable(int g, int index) { return letter(g, LetterClass::X, index); }

    int g() const { return g_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    double coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? 0.0 : it->second;
    }

    /// Accumulates c*w, dropping the term if the result cancels to zero.
    void add_term(const Word& w, double c);

    NcPoly& operator+=(const NcPoly& q);
    NcPoly& operator-=(const NcPoly& q);
    NcPoly& operator*=(double s);
    friend NcPoly operator+(NcPoly p, const NcPoly& q) { return p += q; }
    friend NcPoly operator-(NcPoly p, const NcPoly& q) { return p -= q; }
    friend NcPoly operator*(NcPoly p, double s) { return p *= s; }
    friend NcPoly operator*(double s, NcPoly p) { return p *= s; }
    friend NcPoly operator*(const NcPoly& p, const NcPoly& q);
    friend NcPoly operator-(const NcPoly& p) { return p * -1.0; }

    bool operator==(const NcPoly& q) const { return g_ == q.g_ && terms_ == q.terms_; }

    NcPoly pow(int e) const;
    NcPoly transpose() const;

    int degree() const;  // -1 sentinel for the zero polynomial
    DegreeProfile profile() const;
    bool is_symmetric() const { return *this == transpose(); }

    /// Max |coefficient| difference against q.
    double max_coeff_diff(const NcPoly& q) const;

    std::string to_string() const;

private:
    int g_;
    TermMap terms_;

    void check_same_g(const NcPoly& q) const {
        if (g_ != q.g_) throw std::invalid_argument("NcPoly: mismatched variable counts");
    }
};

/// Parses the expression grammar
///   expr   := term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := number | var | "(" expr ")" | factor "^" uint | factor "'"
///   var    := ("x"|"h") uint
/// The postfix ' is the involution; whitespace is insignificant.
/// H-letters are rejected unless allow_h is set.
NcPoly parse_poly(const std::string& text, int g, bool allow_h = false);

/// Replaces every letter of class `from` by the same-index letter of class `to`.
NcPoly rename_class(const NcPoly& p, LetterClass from, LetterClass to);

std::string word_to_string(const Word& w);

}  // namespace nccurv

#endif
