#include "janossy/cli/polyparse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

namespace janossy::cli {

namespace {

using Poly = std::vector<double>;

Poly add(const Poly& a, const Poly& b, double sign)
{
    Poly r(std::max(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] += sign * b[i];
    return r;
}

Poly mul(const Poly& a, const Poly& b)
{
    Poly r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

void trim(Poly& p)
{
    while (p.size() > 1 && p.back() == 0.0)
        p.pop_back();
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Poly parse()
    {
        Poly p = expr();
        skip();
        if (pos_ != s_.size())
            fail(std::string("unexpected '") + s_[pos_] + "'");
        trim(p);
        return p;
    }

private:
    // expr := ['+'|'-'] term (('+'|'-') term)*
    Poly expr()
    {
        skip();
        double sign = 1.0;
        if (peek('+') || peek('-')) {
            sign = s_[pos_] == '-' ? -1.0 : 1.0;
            ++pos_;
        }
        Poly r = add(Poly{0.0}, term(), sign);
        for (;;) {
            skip();
            if (peek('+')) {
                ++pos_;
                r = add(r, term(), 1.0);
            } else if (peek('-')) {
                ++pos_;
                r = add(r, term(), -1.0);
            } else {
                return r;
            }
        }
    }

    // term := power (('*' | '/' | juxtaposition) power)*
    Poly term()
    {
        Poly r = power();
        for (;;) {
            skip();
            if (peek('*')) {
                ++pos_;
                r = mul(r, power());
            } else if (peek('/')) {
                std::size_t at = pos_++;
                Poly d = power();
                trim(d);
                if (d.size() != 1)
                    fail("division by a non-constant", at);
                if (d[0] == 0.0)
                    fail("division by zero", at);
                for (double& c : r)
                    c /= d[0];
            } else if (pos_ < s_.size() && (s_[pos_] == 'x' || s_[pos_] == '(')) {
                r = mul(r, power());
            } else {
                return r;
            }
        }
    }

    // power := primary ['^' integer]
    Poly power()
    {
        Poly base = primary();
        skip();
        if (!peek('^'))
            return base;
        ++pos_;
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a nonnegative integer exponent");
        int e = std::stoi(s_.substr(start, pos_ - start));
        if (e > 64)
            fail("exponent too large", start);
        Poly r{1.0};
        for (int i = 0; i < e; ++i)
            r = mul(r, base);
        return r;
    }

    Poly primary()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        char ch = s_[pos_];
        if (ch == 'x') {
            ++pos_;
            return {0.0, 1.0};
        }
        if (ch == '(') {
            ++pos_;
            Poly r = expr();
            skip();
            if (!peek(')'))
                fail("expected ')'");
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
            double v = 0.0;
            auto res = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
            if (res.ec != std::errc())
                fail("malformed number");
            pos_ = static_cast<std::size_t>(res.ptr - s_.data());
            return {v};
        }
        fail(std::string("unexpected '") + ch + "'");
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
    [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
    [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw PolyParseError(what, at); }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

std::vector<double> parse_polynomial(const std::string& text)
{
    Poly p = Parser(text).parse();
    for (double c : p)
        if (!std::isfinite(c))
            throw PolyParseError("non-finite coefficient", 0);
    return p;
}

Potential parse_potential(const std::string& text)
{
    return Potential(parse_polynomial(text));
}

} // namespace janossy::cli
