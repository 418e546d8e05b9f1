#include "tuttelab/observable.hpp"

#include "tuttelab/config.hpp"

#include <cctype>
#include <string>

namespace tuttelab {

namespace {

class Parser {
public:
    Parser(const std::string& src, int arity) : src_(src), arity_(arity) {}

    RatPoly run() {
        RatPoly out = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("trailing input");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw UsageError("observable parse error at offset " + std::to_string(pos_) +
                         ": " + why);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    uint64_t digits() {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            fail("expected digits");
        uint64_t value = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            value = value * 10 + static_cast<uint64_t>(src_[pos_] - '0');
            if (value > (1ull << 40)) fail("number too large");
            ++pos_;
        }
        return value;
    }

    RatPoly expr() {
        RatPoly acc = term();
        for (;;) {
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else return acc;
        }
    }

    RatPoly term() {
        RatPoly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    RatPoly factor() {
        RatPoly base = atom();
        if (eat('^')) {
            uint64_t e = digits();
            if (e > 64) fail("exponent too large");
            RatPoly acc = RatPoly::constant(arity_, BigRat(1));
            for (uint64_t i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    RatPoly atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            RatPoly inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == '-') {
            eat('-');
            return RatPoly::constant(arity_, BigRat(-1)) * factor();
        }
        if (c == 't') {
            ++pos_;  // peek() already skipped the whitespace
            if (pos_ < src_.size() && src_[pos_] == '_') ++pos_;
            uint64_t idx = digits();
            if (idx < 1 || idx > static_cast<uint64_t>(arity_))
                fail("edge variable t" + std::to_string(idx) + " is out of range (arity " +
                     std::to_string(arity_) + ")");
            return RatPoly::var_t(arity_, static_cast<int>(idx - 1));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num(digits());
            if (eat('/')) {
                BigInt den(digits());
                if (den == 0) fail("zero denominator");
                return RatPoly::constant(arity_, BigRat(num, den));
            }
            return RatPoly::constant(arity_, BigRat(num));
        }
        fail("expected a constant, a variable, or '('");
    }

    const std::string& src_;
    int arity_;
    size_t pos_ = 0;
};

}  // namespace

RatPoly parse_observable(const std::string& text, int arity) {
    if (arity < 0) throw UsageError("negative arity");
    return Parser(text, arity).run();
}

}  // namespace tuttelab
