#include "semicore/parse.hpp"

#include <cctype>
#include <string>

#include "semicore/error.hpp"

namespace semicore {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

class PolyParser {
public:
    PolyParser(std::string_view text, Field field) : field_(field) {
        // Strip whitespace and map the Unicode minus sign to '-', keeping
        // original offsets for error messages.
        for (std::size_t i = 0; i < text.size(); ++i) {
            const unsigned char ch = static_cast<unsigned char>(text[i]);
            if (std::isspace(ch)) continue;
            if (ch == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
                static_cast<unsigned char>(text[i + 2]) == 0x92) {
                chars_.push_back('-');
                offsets_.push_back(i);
                i += 2;
                continue;
            }
            chars_.push_back(static_cast<char>(ch));
            offsets_.push_back(i);
        }
        offsets_.push_back(text.size());
    }

    Poly parse() {
        if (chars_.empty()) fail("a term");
        Poly result(field_);
        bool first = true;
        while (pos_ < chars_.size()) {
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = peek() == '-';
                ++pos_;
            } else if (!first) {
                fail("'+' or '-'");
            }
            first = false;
            Poly term = parse_term();
            if (negative) term = -term;
            result += term;
        }
        return result;
    }

private:
    char peek() const { return pos_ < chars_.size() ? chars_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& expected) const {
        throw Error(Errc::SyntaxError, "at offset " + std::to_string(offsets_[pos_]) + ": expected " + expected);
    }

    std::string take_scalar_text() {
        std::string s;
        while (pos_ < chars_.size() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) {
            s.push_back(chars_[pos_++]);
        }
        return s;
    }

    Poly parse_term() {
        Scalar coeff = field_.one();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_scalar(take_scalar_text(), field_);
            if (peek() != '*') return Poly::constant(coeff);
            ++pos_;
        }
        if (peek() != 't') fail("coefficient or 't'");
        ++pos_;
        int exponent = 1;
        if (peek() == '^') {
            ++pos_;
            if (peek() == '-') throw Error(Errc::NegativeExponent, "at offset " + std::to_string(offsets_[pos_]));
            std::string digits;
            while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(chars_[pos_++]);
            if (digits.empty()) fail("exponent");
            if (digits.size() > 6) throw Error(Errc::InvalidArgument, "exponent too large: " + digits);
            exponent = std::stoi(digits);
        }
        return Poly::monomial(coeff, exponent);
    }

    Field field_;
    std::string chars_;
    std::vector<std::size_t> offsets_;
    std::size_t pos_ = 0;
};

}  // namespace

Field parse_field(std::string_view text) {
    if (text == "Q" || text == "QQ") return Field::rationals();
    std::string_view digits;
    if (text.starts_with("Fp:")) {
        digits = text.substr(3);
    } else if (text.starts_with("GF(") && text.ends_with(")")) {
        digits = text.substr(3, text.size() - 4);
    }
    if (!all_digits(digits) || digits.size() > 19) {
        throw Error(Errc::SyntaxError, "field must be Q or Fp:<prime>, got '" + std::string(text) + "'");
    }
    return Field::prime(std::stoull(std::string(digits)));
}

Scalar parse_scalar(std::string_view text, Field field) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const std::size_t slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw Error(Errc::BadScalar, "'" + std::string(text) + "'");
    if (slash != std::string_view::npos && !field.is_rational()) {
        throw Error(Errc::BadScalar, "fractions are not residues: '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw Error(Errc::BadScalar, "zero denominator in '" + std::string(text) + "'");
    if (negative) n = -n;
    return field.from_fraction(n, d);
}

Poly parse_poly(std::string_view text, Field field) { return PolyParser(text, field).parse(); }

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = text.substr(start, comma - start);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        std::string_view digits = item;
        if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
        if (!all_digits(digits) || digits.size() > 9) {
            throw Error(Errc::SyntaxError, "expected an integer list, got '" + std::string(text) + "'");
        }
        out.push_back(std::stoi(std::string(item)));
        start = comma + 1;
    }
    return out;
}

}  // namespace semicore
