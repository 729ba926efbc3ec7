#include "cyclo/growth.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "cyclo/errors.hpp"

namespace cyclo {

// ---------- polynomials ----------

Poly Poly::constant(const Rational& c) {
    Poly p;
    if (c != 0) p.coeffs = {c};
    return p;
}

Poly Poly::variable() {
    Poly p;
    p.coeffs = {Rational(0), Rational(1)};
    return p;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

void Poly::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly out;
    out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
    out.trim();
    return out;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly out;
    out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
    out.trim();
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    if (a.is_zero() || b.is_zero()) return out;
    out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    out.trim();
    return out;
}

namespace {

Poly poly_rem(Poly a, const Poly& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const Rational f = a.coeffs.back() / b.coeffs.back();
        const std::size_t shift = a.degree() - b.degree();
        for (std::size_t i = 0; i < b.coeffs.size(); ++i) a.coeffs[i + shift] -= f * b.coeffs[i];
        a.trim();
    }
    return a;
}

Poly poly_quot(const Poly& a, const Poly& b) {
    Poly rem = a, quot;
    quot.coeffs.assign(a.coeffs.size(), Rational(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const Rational f = rem.coeffs.back() / b.coeffs.back();
        const std::size_t shift = rem.degree() - b.degree();
        quot.coeffs[shift] += f;
        for (std::size_t i = 0; i < b.coeffs.size(); ++i) rem.coeffs[i + shift] -= f * b.coeffs[i];
        rem.trim();
    }
    quot.trim();
    return quot;
}

} // namespace

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.coeffs.back() != 1) {
        const Rational lead = a.coeffs.back();
        for (auto& c : a.coeffs) c /= lead;
    }
    return a;
}

std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = p.coeffs.size(); i-- > 0;) {
        if (p.coeffs[i] == 0) continue;
        if (!out.empty()) out += sgn(p.coeffs[i]) < 0 ? " - " : " + ";
        else if (sgn(p.coeffs[i]) < 0) out += "-";
        const Rational mag = abs(p.coeffs[i]);
        if (mag != 1 || i == 0) out += to_string(mag);
        if (i >= 1) {
            if (mag != 1) out += "*";
            out += "n";
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out;
}

// ---------- sequences ----------

Rational GrowthSequence::value_at(std::size_t n) const {
    if (finite_support) {
        for (const auto& [i, v] : support)
            if (i == n) return v;
        return 0;
    }
    Rational val = p.eval(Rational(static_cast<long>(n))) / q.eval(Rational(static_cast<long>(n)));
    if (r != 1) {
        Rational pow = 1;
        for (std::size_t i = 0; i < n; ++i) pow *= r;
        val *= pow;
    }
    if (s != 0) {
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
        Rational fs(fact);
        Rational powed = 1;
        for (long i = 0; i < (s > 0 ? s : -s); ++i) powed *= fs;
        if (s > 0)
            val *= powed;
        else
            val /= powed;
    }
    return val;
}

std::string GrowthSequence::to_string() const {
    if (finite_support) {
        std::string out = "finite{";
        for (std::size_t i = 0; i < support.size(); ++i) {
            if (i) out += ", ";
            out += std::to_string(support[i].first) + "=" + cyclo::to_string(support[i].second);
        }
        return out + "}";
    }
    std::string out = "(" + poly_to_string(p) + ")/(" + poly_to_string(q) + ")";
    if (r != 1) out += " * (" + cyclo::to_string(r) + ")^n";
    if (s != 0) out += " * fact(n)^" + std::to_string(s);
    return out;
}

GrowthSequence finite_sequence(std::vector<std::pair<std::size_t, Rational>> support) {
    GrowthSequence seq;
    seq.finite_support = true;
    std::sort(support.begin(), support.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [i, v] : support)
        if (v != 0) seq.support.emplace_back(i, std::move(v));
    seq.p = Poly{};
    seq.q = Poly::constant(1);
    return seq;
}

namespace {

// Largest candidate nonnegative integer root bound (Cauchy bound), for checking
// that q never vanishes on N.
void check_no_natural_roots(const Poly& q) {
    if (q.is_zero()) throw InputError("growth sequence: zero denominator polynomial");
    if (q.degree() == 0) return;
    Rational bound = 0;
    for (std::size_t i = 0; i < q.coeffs.size(); ++i) {
        const Rational ratio = abs(q.coeffs[i] / q.coeffs.back());
        if (ratio > bound) bound = ratio;
    }
    bound += 1;
    if (bound > 100000)
        throw InputError("growth sequence: denominator root scan out of supported range");
    const long limit = static_cast<long>(bound.get_d()) + 1;
    for (long n = 0; n <= limit; ++n)
        if (q.eval(Rational(n)) == 0)
            throw InputError("growth sequence: denominator vanishes at n = " + std::to_string(n));
}

} // namespace

GrowthSequence symbolic_sequence(Poly p, Poly q, Rational r, long s) {
    if (r < 0) throw InputError("growth sequence: r must be nonnegative");
    if (q.is_zero()) throw InputError("growth sequence: zero denominator polynomial");
    GrowthSequence seq;
    if (!p.is_zero()) {
        const Poly g = poly_gcd(p, q);
        if (g.degree() >= 1) {
            p = poly_quot(p, g);
            q = poly_quot(q, g);
        }
    }
    check_no_natural_roots(q);
    // Scale so q has positive leading coefficient and constant q means q = 1-like form.
    const Rational lead = q.coeffs.back();
    if (lead != 1) {
        for (auto& c : q.coeffs) c /= lead;
        for (auto& c : p.coeffs) c /= lead;
    }
    seq.p = std::move(p);
    seq.q = std::move(q);
    seq.r = std::move(r);
    seq.s = s;
    return seq;
}

std::string growth_class_name(GrowthClassKind k) {
    switch (k) {
        case GrowthClassKind::FinitelySupported: return "FinitelySupported";
        case GrowthClassKind::PolynomialGrowth: return "PolynomialGrowth";
        case GrowthClassKind::DimWeightedSummable: return "DimWeightedSummable";
        case GrowthClassKind::FinGenSubgroupEntries: return "FinGenSubgroupEntries";
        case GrowthClassKind::Arbitrary: return "Arbitrary";
    }
    return "?";
}

GrowthClassKind growth_class_from_name(const std::string& name) {
    for (GrowthClassKind k :
         {GrowthClassKind::FinitelySupported, GrowthClassKind::PolynomialGrowth,
          GrowthClassKind::DimWeightedSummable, GrowthClassKind::FinGenSubgroupEntries,
          GrowthClassKind::Arbitrary})
        if (growth_class_name(k) == name) return k;
    throw InputError("unknown growth class: " + name);
}

Membership ClassificationTable::of(GrowthClassKind k) const {
    switch (k) {
        case GrowthClassKind::FinitelySupported: return finitely_supported;
        case GrowthClassKind::PolynomialGrowth: return polynomial_growth;
        case GrowthClassKind::DimWeightedSummable: return dim_weighted_summable;
        case GrowthClassKind::FinGenSubgroupEntries: return fin_gen_subgroup;
        case GrowthClassKind::Arbitrary: return arbitrary;
    }
    return Membership::Undecided;
}

namespace {

// p is Z-valued on N iff all finite differences at 0 are integers.
bool integer_valued(const Poly& p) {
    if (p.is_zero()) return true;
    std::vector<Rational> vals;
    for (std::size_t n = 0; n <= p.degree(); ++n) vals.push_back(p.eval(Rational(static_cast<long>(n))));
    for (std::size_t k = 0; k <= p.degree(); ++k) {
        if (!is_integer(vals[0])) return false;
        for (std::size_t i = 0; i + 1 < vals.size(); ++i) vals[i] = vals[i + 1] - vals[i];
        if (!vals.empty()) vals.pop_back();
    }
    return true;
}

// Sound, deliberately incomplete: establishes "a_n is an integer for all large n"
// in the clean cases only. Everything else reports false and the class stays
// undecided. After canonicalization a constant denominator is folded into p,
// so the symbolic case is a_n = p(n) u^n (n!)^s with rational-coefficient p.
bool eventually_integer(const GrowthSequence& seq) {
    if (seq.finite_support) return true; // tail is zero
    if (seq.p.is_zero()) return true;
    if (seq.r == 0) return true;
    if (seq.r.get_den() != 1) return false;
    if (seq.s < 0) return false;
    if (seq.q.degree() >= 1) return false;
    if (seq.s >= 1) return true; // (n!)^s eventually clears every fixed denominator
    if (integer_valued(seq.p)) return true;
    if (seq.r == 1) return false;
    // u >= 2: u^n eventually clears denominators whose primes all divide u.
    const mpz_class u = seq.r.get_num();
    for (const auto& cc : seq.p.coeffs) {
        mpz_class den = cc.get_den();
        while (den != 1) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), u.get_mpz_t());
            if (g == 1) return false;
            while (mpz_divisible_p(den.get_mpz_t(), g.get_mpz_t())) den /= g;
        }
    }
    return true;
}

} // namespace

ClassificationTable classify(const GrowthSequence& seq, Weight weight) {
    ClassificationTable t;
    t.weight = weight;
    if (!seq.finite_support) {
        if (!seq.p.is_zero() && poly_gcd(seq.p, seq.q).degree() >= 1)
            throw NonCanonicalError("classify: gcd(p, q) is nontrivial");
        check_no_natural_roots(seq.q);
        if (seq.r < 0) throw NonCanonicalError("classify: r must be nonnegative");
    }
    const bool finite = seq.finite_support || seq.p.is_zero() || seq.r == 0;
    if (finite) {
        t.finitely_supported = Membership::Yes;
        t.polynomial_growth = Membership::Yes;
        t.dim_weighted_summable = Membership::Yes;
        t.fin_gen_subgroup = Membership::Yes;
        t.arbitrary = Membership::Yes;
        return t;
    }
    t.finitely_supported = Membership::No;
    t.polynomial_growth =
        (seq.s < 0 || (seq.s == 0 && seq.r <= 1)) ? Membership::Yes : Membership::No;
    if (seq.s < 0) {
        t.dim_weighted_summable = Membership::Yes;
    } else if (seq.s > 0) {
        t.dim_weighted_summable = Membership::No;
    } else if (seq.r < 1) {
        t.dim_weighted_summable = Membership::Yes;
    } else if (seq.r > 1) {
        t.dim_weighted_summable = Membership::No;
    } else {
        // r = 1, s = 0: p-series with exponent deg q - deg p - [weight = n].
        const long drop = static_cast<long>(seq.q.degree()) - static_cast<long>(seq.p.degree()) -
                          (weight == Weight::Dim ? 1 : 0);
        t.dim_weighted_summable = drop >= 2 ? Membership::Yes : Membership::No;
    }
    t.fin_gen_subgroup = eventually_integer(seq) ? Membership::Yes : Membership::Undecided;
    t.arbitrary = Membership::Yes;
    return t;
}

bool strictly_below(GrowthClassKind lower, GrowthClassKind upper) {
    using K = GrowthClassKind;
    if (lower == upper) return false;
    if (lower == K::FinitelySupported) return true;
    if (upper == K::Arbitrary) return true;
    return false;
}

GrowthSequence inclusion_witness(GrowthClassKind lower, GrowthClassKind upper, Weight weight) {
    using K = GrowthClassKind;
    if (!strictly_below(lower, upper))
        throw NotComparableError("classes " + growth_class_name(lower) + " and " +
                                 growth_class_name(upper) + " are not strictly nested");
    const Poly one = Poly::constant(1);
    auto all_ones = [&] { return symbolic_sequence(one, one, 1, 0); };
    GrowthSequence candidate;
    if (lower == K::FinitelySupported && upper == K::DimWeightedSummable) {
        Poly np1 = Poly::variable() + one;
        Poly den = np1 * np1;
        if (weight == Weight::Dim) den = den * np1;
        candidate = symbolic_sequence(one, den, 1, 0);
    } else if (lower == K::PolynomialGrowth || lower == K::DimWeightedSummable) {
        // escape to Arbitrary
        candidate = lower == K::PolynomialGrowth ? symbolic_sequence(one, one, 2, 0) : all_ones();
    } else if (lower == K::FinGenSubgroupEntries) {
        throw NoWitnessError(
            "no decided witness exists: membership in FinGenSubgroupEntries is only decided "
            "for eventually integer sequences, and every such sequence belongs to the class");
    } else {
        candidate = all_ones();
    }
    const ClassificationTable table = classify(candidate, weight);
    if (table.of(upper) != Membership::Yes || table.of(lower) != Membership::No)
        throw MathError("inclusion_witness: candidate failed its own classification");
    return candidate;
}

LimProdCertificate lim_prod_demo(std::size_t stages) {
    if (stages == 0) throw InputError("lim_prod_demo: need at least one stage");
    LimProdCertificate cert;
    cert.stages = stages;
    for (std::size_t m = 1; m <= stages; ++m) {
        cert.support_bound.push_back(m);
        cert.first_uncovered.push_back(m + 1);
    }
    cert.obstruction_at_every_stage = true;
    return cert;
}

// ---------- parser ----------

namespace {

struct RatFun {
    Poly num = Poly::constant(0);
    Poly den = Poly::constant(1);

    void reduce() {
        if (num.is_zero()) {
            den = Poly::constant(1);
            return;
        }
        const Poly g = poly_gcd(num, den);
        if (g.degree() >= 1) {
            num = poly_quot(num, g);
            den = poly_quot(den, g);
        }
    }
    bool is_constant() const { return num.degree() == 0 && den.degree() == 0; }
    Rational constant_value() const {
        if (num.is_zero()) return 0;
        return num.coeffs[0] / den.coeffs[0];
    }
};

// Value during parsing: rational function times r^n times fact(n)^s.
struct SeqVal {
    RatFun rf;
    Rational rbase = 1;
    long fs = 0;

    bool pure_ratfun() const { return rbase == 1 && fs == 0; }
};

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    SeqVal parse() {
        SeqVal v = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return v;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw InputError("sequence syntax error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    SeqVal parse_sum() {
        SeqVal acc = parse_product();
        while (true) {
            if (eat('+')) {
                SeqVal rhs = parse_product();
                acc = add(acc, rhs, false);
            } else if (eat('-')) {
                SeqVal rhs = parse_product();
                acc = add(acc, rhs, true);
            } else {
                return acc;
            }
        }
    }

    SeqVal add(const SeqVal& a, const SeqVal& b, bool negate) {
        if (!a.pure_ratfun() || !b.pure_ratfun())
            fail("addition is only supported between polynomial fractions");
        SeqVal out;
        out.rf.num = negate ? a.rf.num * b.rf.den - b.rf.num * a.rf.den
                            : a.rf.num * b.rf.den + b.rf.num * a.rf.den;
        out.rf.den = a.rf.den * b.rf.den;
        out.rf.reduce();
        return out;
    }

    SeqVal parse_product() {
        SeqVal acc = parse_unary();
        while (true) {
            if (eat('*')) {
                acc = mul(acc, parse_unary(), false);
            } else if (eat('/')) {
                acc = mul(acc, parse_unary(), true);
            } else {
                return acc;
            }
        }
    }

    SeqVal mul(const SeqVal& a, const SeqVal& b, bool divide) {
        SeqVal out;
        if (divide) {
            if (b.rf.num.is_zero()) fail("division by zero");
            out.rf.num = a.rf.num * b.rf.den;
            out.rf.den = a.rf.den * b.rf.num;
            if (b.rbase != 0)
                out.rbase = a.rbase / b.rbase;
            else
                fail("division by 0^n");
            out.fs = a.fs - b.fs;
        } else {
            out.rf.num = a.rf.num * b.rf.num;
            out.rf.den = a.rf.den * b.rf.den;
            out.rbase = a.rbase * b.rbase;
            out.fs = a.fs + b.fs;
        }
        out.rf.reduce();
        return out;
    }

    SeqVal parse_unary() {
        if (eat('-')) {
            SeqVal v = parse_unary();
            v.rf.num = Poly::constant(-1) * v.rf.num;
            return v;
        }
        return parse_power();
    }

    SeqVal parse_power() {
        SeqVal base = parse_atom();
        skip_ws();
        if (!eat('^')) return base;
        skip_ws();
        if (peek() == 'n') {
            ++pos_;
            if (!base.pure_ratfun() || !base.rf.is_constant())
                fail("only constant bases may carry the exponent n");
            const Rational r = base.rf.constant_value();
            if (r < 0) fail("exponential base must be nonnegative");
            SeqVal out;
            out.rf.num = Poly::constant(1);
            out.rbase = r;
            return out;
        }
        bool neg = eat('-');
        const long k = parse_int();
        SeqVal out;
        out.rf.num = Poly::constant(1);
        if (base.fs != 0 && base.rf.is_constant() && base.rf.constant_value() == 1 &&
            base.rbase == 1) {
            out.fs = base.fs * (neg ? -k : k);
            return out;
        }
        if (!base.pure_ratfun()) fail("integer powers apply to polynomial fractions only");
        Poly pn = Poly::constant(1), pd = Poly::constant(1);
        for (long i = 0; i < k; ++i) {
            pn = pn * base.rf.num;
            pd = pd * base.rf.den;
        }
        out.rf.num = neg ? pd : pn;
        out.rf.den = neg ? pn : pd;
        if (out.rf.den.is_zero()) fail("negative power of zero");
        out.rf.reduce();
        return out;
    }

    long parse_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return std::stol(text_.substr(start, pos_ - start));
    }

    SeqVal parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            SeqVal v = parse_sum();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const long value = parse_int();
            SeqVal v;
            v.rf.num = Poly::constant(Rational(value));
            return v;
        }
        if (text_.compare(pos_, 5, "fact(") == 0) {
            pos_ += 5;
            skip_ws();
            if (peek() != 'n') fail("fact takes the variable n");
            ++pos_;
            if (!eat(')')) fail("expected ')' after fact(n");
            SeqVal v;
            v.rf.num = Poly::constant(1);
            v.fs = 1;
            return v;
        }
        if (c == 'n') {
            ++pos_;
            SeqVal v;
            v.rf.num = Poly::variable();
            return v;
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

GrowthSequence parse_sequence(const std::string& expr) {
    Parser parser(expr);
    const SeqVal v = parser.parse();
    return symbolic_sequence(v.rf.num, v.rf.den, v.rbase, v.fs);
}

GrowthSequence parse_support(const std::string& text) {
    std::vector<std::pair<std::size_t, Rational>> support;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos) throw InputError("support entries look like index=value");
        try {
            support.emplace_back(std::stoul(item.substr(0, eq)), parse_rational(item.substr(eq + 1)));
        } catch (const std::logic_error&) {
            throw InputError("bad support entry: " + item);
        }
        pos = comma + 1;
    }
    return finite_sequence(std::move(support));
}

} // namespace cyclo
