#include "carlitz/parse.hpp"

#include <cctype>
#include <string>

namespace carlitz {

namespace {

constexpr std::uint64_t kMaxExponent = 1000000;

std::string strip_ws(std::string_view in) {
    std::string out;
    out.reserve(in.size());
    for (char c : in)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

[[noreturn]] void fail(const std::string& what, std::string_view text) {
    throw ParseError(what + " in \"" + std::string(text) + "\"");
}

std::uint64_t read_number(std::string_view t, size_t& i) {
    std::uint64_t n = 0;
    size_t start = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
        n = n * 10 + std::uint64_t(t[i] - '0');
        if (n > kMaxExponent) fail("number too large", t);
        ++i;
    }
    if (i == start) fail("malformed term: expected a number", t);
    return n;
}

// One summand of a field element: digits, digits[*]w[^k], or w[^k].
FieldElement parse_element_term(std::string_view t, const FieldSpecPtr& spec) {
    if (t.empty()) fail("malformed term: empty summand", t);
    size_t i = 0;
    bool have_int = false;
    std::uint64_t n = 0;
    if (std::isdigit(static_cast<unsigned char>(t[i]))) {
        n = read_number(t, i);
        have_int = true;
    }
    if (i < t.size() && t[i] == '*') {
        if (!have_int || i + 1 >= t.size() || t[i + 1] != 'w') fail("malformed term", t);
        ++i;
    }
    bool have_w = false;
    std::uint64_t k = 1;
    if (i < t.size() && t[i] == 'w') {
        have_w = true;
        ++i;
        if (i < t.size() && t[i] == '^') {
            ++i;
            k = read_number(t, i);
        }
    }
    if (i != t.size()) fail("unknown symbol", t);
    if (!have_int && !have_w) fail("malformed term", t);

    FieldElement coeff = FieldElement::one(spec);
    if (have_int) {
        if (n >= spec->p()) fail("coefficient out of field (expected 0.." + std::to_string(spec->p() - 1) + ")", t);
        coeff = FieldElement(spec, fe_t(n));
    }
    if (!have_w) return coeff;
    if (spec->prime_field()) fail("unknown symbol 'w' in a prime field", t);
    return coeff * FieldElement::generator(spec).pow(k);
}

std::vector<std::string_view> split_top_level(std::string_view t) {
    std::vector<std::string_view> parts;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < t.size(); ++i) {
        if (t[i] == '(') ++depth;
        else if (t[i] == ')') {
            if (--depth < 0) fail("unbalanced parentheses", t);
        } else if (t[i] == '+' && depth == 0) {
            parts.push_back(t.substr(start, i - start));
            start = i + 1;
        }
    }
    if (depth != 0) fail("unbalanced parentheses", t);
    parts.push_back(t.substr(start));
    return parts;
}

FieldElement parse_element_text(std::string_view t, const FieldSpecPtr& spec) {
    if (t.empty()) fail("empty field element", t);
    FieldElement acc = FieldElement::zero(spec);
    for (auto part : split_top_level(t)) acc = acc + parse_element_term(part, spec);
    return acc;
}

// One summand of a polynomial: [coeff *] T [^k], or a bare constant.
Poly parse_poly_term(std::string_view t, const FieldSpecPtr& spec) {
    if (t.empty()) fail("malformed term: empty summand", t);
    size_t tpos = std::string_view::npos;
    int depth = 0;
    for (size_t i = 0; i < t.size(); ++i) {
        if (t[i] == '(') ++depth;
        else if (t[i] == ')') --depth;
        else if (t[i] == 'T' && depth == 0) {
            tpos = i;
            break;
        }
    }

    if (tpos == std::string_view::npos) {
        // Constant term, possibly written "(w+1)".
        std::string_view inner = t;
        if (inner.front() == '(') {
            if (inner.back() != ')') fail("malformed term", t);
            inner = inner.substr(1, inner.size() - 2);
        }
        return Poly::constant(parse_element_text(inner, spec));
    }

    std::string_view coeff_part = t.substr(0, tpos);
    std::string_view rest = t.substr(tpos + 1);

    FieldElement coeff = FieldElement::one(spec);
    if (!coeff_part.empty()) {
        if (coeff_part.back() == '*') coeff_part.remove_suffix(1);
        if (coeff_part.empty()) fail("malformed term", t);
        if (coeff_part.front() == '(') {
            if (coeff_part.back() != ')') fail("malformed term", t);
            coeff = parse_element_text(coeff_part.substr(1, coeff_part.size() - 2), spec);
        } else {
            coeff = parse_element_term(coeff_part, spec);
        }
    }

    std::uint64_t k = 1;
    if (!rest.empty()) {
        if (rest[0] != '^') fail("malformed term", t);
        size_t i = 1;
        k = read_number(rest, i);
        if (i != rest.size()) fail("malformed term", t);
    }
    return Poly::constant(coeff).shifted(size_t(k));
}

} // namespace

FieldElement parse_field_element(std::string_view text, const FieldSpecPtr& spec) {
    if (!spec) throw DomainError("null field spec");
    std::string t = strip_ws(text);
    for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != 'w' && c != '^' && c != '*' && c != '+')
            fail(std::string("unknown symbol '") + c + "'", text);
    return parse_element_text(t, spec);
}

Poly parse_poly(std::string_view text, const FieldSpecPtr& spec) {
    if (!spec) throw DomainError("null field spec");
    std::string t = strip_ws(text);
    if (t.empty()) fail("empty polynomial", text);
    for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != 'w' && c != 'T' && c != '^' && c != '*' &&
            c != '+' && c != '(' && c != ')')
            fail(std::string("unknown symbol '") + c + "'", text);
    Poly acc = Poly::zero(spec);
    for (auto part : split_top_level(t)) acc = acc + parse_poly_term(part, spec);
    return acc;
}

} // namespace carlitz
