#include "kantorkit/witt.hpp"

#include <cctype>
#include <functional>

#include "kantorkit/error.hpp"

namespace kantorkit {

using Kind = GradedGen::Kind;

std::string GradedGen::to_string() const
{
    return (kind == Kind::L ? "L" : "I") + std::to_string(index);
}

GradedElement::GradedElement(GradedGen g, Rational c)
{
    add(g, c);
}

Rational GradedElement::coeff(GradedGen g) const
{
    auto it = support_.find(g);
    return it == support_.end() ? Rational(0) : it->second;
}

void GradedElement::add(GradedGen g, const Rational& c)
{
    if (kantorkit::is_zero(c)) return;
    auto [it, inserted] = support_.emplace(g, c);
    if (inserted) return;
    it->second += c;
    if (kantorkit::is_zero(it->second)) support_.erase(it);
}

GradedElement& GradedElement::operator+=(const GradedElement& other)
{
    for (auto& [g, c] : other.support_) add(g, c);
    return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& other)
{
    for (auto& [g, c] : other.support_) add(g, -c);
    return *this;
}

GradedElement& GradedElement::operator*=(const Rational& c)
{
    if (kantorkit::is_zero(c)) support_.clear();
    for (auto& [g, v] : support_) v *= c;
    return *this;
}

std::string GradedElement::to_string() const
{
    if (support_.empty()) return "0";
    std::string out;
    for (auto& [g, c] : support_) {
        bool neg = sgn(c) < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        if (mag != 1) out += kantorkit::to_string(mag) + "*";
        out += g.to_string();
    }
    return out;
}

GradedElement parse_graded(const std::string& text)
{
    GradedElement out;
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) {
        throw Error(ErrorKind::ParseError, what + " at column " + std::to_string(pos + 1) + " in '" + text + "'");
    };
    auto space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto integer = [&](bool allow_sign) {
        std::size_t start = pos;
        if (allow_sign && pos < text.size() && text[pos] == '-') ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (text[start] == '-' && pos == start + 1)) fail("expected an integer");
        return text.substr(start, pos - start);
    };
    space();
    if (text.substr(pos) == "0") return out;
    bool first = true;
    while (true) {
        space();
        if (pos >= text.size()) {
            if (first) fail("empty element");
            break;
        }
        Rational sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
            space();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        Rational c = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::string num = integer(false);
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                num += "/" + integer(false);
            }
            c = parse_rational(num);
            space();
            if (pos >= text.size() || text[pos] != '*') fail("expected '*'");
            ++pos;
            space();
        }
        if (pos >= text.size() || (text[pos] != 'L' && text[pos] != 'I')) fail("expected L or I");
        Kind kind = text[pos] == 'L' ? Kind::L : Kind::I;
        ++pos;
        std::int64_t index = std::stoll(integer(true));
        out.add({kind, index}, sign * c);
        first = false;
    }
    return out;
}

namespace {

using GenProduct = std::function<GradedElement(GradedGen, GradedGen)>;

GradedElement bilinear(const GradedElement& x, const GradedElement& y, const GenProduct& f)
{
    GradedElement out;
    for (auto& [gx, cx] : x.support())
        for (auto& [gy, cy] : y.support()) out += (cx * cy) * f(gx, gy);
    return out;
}

}  // namespace

GradedElement witt_juxt(const GradedElement& x, const GradedElement& y)
{
    return bilinear(x, y, [](GradedGen p, GradedGen q) {
        std::int64_t s = p.index + q.index;
        if (p.kind == Kind::L && q.kind == Kind::L) return GradedElement(GradedGen::L(s));
        if (p.kind == Kind::I && q.kind == Kind::I) return GradedElement();
        return GradedElement(GradedGen::I(s));
    });
}

GradedElement witt_dot(const GradedElement& x, const GradedElement& y, const WittConfig& cfg)
{
    return witt_juxt(cfg.w, witt_juxt(x, y));
}

GradedElement witt_bracket(const GradedElement& x, const GradedElement& y, const WittConfig& cfg)
{
    return bilinear(x, y, [&](GradedGen p, GradedGen q) {
        std::int64_t s = p.index + q.index;
        Rational m = p.index, n = q.index;
        if (p.kind == Kind::L && q.kind == Kind::L) return GradedElement(GradedGen::L(s), m - n);
        if (p.kind == Kind::L && q.kind == Kind::I) return GradedElement(GradedGen::I(s), m - n - cfg.a);
        if (p.kind == Kind::I && q.kind == Kind::L) return GradedElement(GradedGen::I(s), -(n - m - cfg.a));
        return GradedElement();
    });
}

GradedElement witt_star(const GradedElement& x, const GradedElement& y, const GradedElement& u,
                        const WittConfig& cfg)
{
    // L_i * L_j = -sum (k+n) u1_k w1_n L + (k+n+a)(u1_k w2_n + u2_k w1_n) I,
    // L_i * I_j = -sum (k+n) u1_k w1_n I, I * I = 0; the product is commutative.
    return bilinear(x, y, [&](GradedGen p, GradedGen q) {
        GradedElement out;
        if (p.kind == Kind::I && q.kind == Kind::I) return out;
        bool both_l = p.kind == Kind::L && q.kind == Kind::L;
        for (auto& [gu, cu] : u.support())
            for (auto& [gw, cw] : cfg.w.support()) {
                std::int64_t t = p.index + q.index + gu.index + gw.index;
                Rational kn = gu.index + gw.index;
                if (gu.kind == Kind::L && gw.kind == Kind::L) {
                    if (both_l) out.add(GradedGen::L(t), -kn * cu * cw);
                    else out.add(GradedGen::I(t), -kn * cu * cw);
                } else if (both_l && gu.kind != gw.kind) {
                    out.add(GradedGen::I(t), -(kn + cfg.a) * cu * cw);
                }
            }
        return out;
    });
}

GradedElement witt_curly(const GradedElement& x, const GradedElement& y, const GradedElement& u,
                         const WittConfig& cfg)
{
    // {L_i, L_j} = (j-i) sum u1_k w1_n L + (u1_k w2_n + u2_k w1_n) I,
    // {L_i, I_j} = (j-i+a) sum u1_k w1_n I, {I, I} = 0; the product is antisymmetric.
    return bilinear(x, y, [&](GradedGen p, GradedGen q) {
        GradedElement out;
        if (p.kind == Kind::I && q.kind == Kind::I) return out;
        Rational sign = 1;
        if (p.kind == Kind::I) {
            std::swap(p, q);
            sign = -1;
        }
        bool both_l = q.kind == Kind::L;
        Rational factor = Rational(q.index - p.index) + (both_l ? Rational(0) : cfg.a);
        for (auto& [gu, cu] : u.support())
            for (auto& [gw, cw] : cfg.w.support()) {
                std::int64_t t = p.index + q.index + gu.index + gw.index;
                if (gu.kind == Kind::L && gw.kind == Kind::L) {
                    out.add(both_l ? GradedGen::L(t) : GradedGen::I(t), sign * factor * cu * cw);
                } else if (both_l && gu.kind != gw.kind) {
                    out.add(GradedGen::I(t), sign * factor * cu * cw);
                }
            }
        return out;
    });
}

GradedElement witt_star_direct(const GradedElement& x, const GradedElement& y, const GradedElement& u,
                               const WittConfig& cfg)
{
    auto br = [&](const GradedElement& p, const GradedElement& q) { return witt_bracket(p, q, cfg); };
    auto dot = [&](const GradedElement& p, const GradedElement& q) { return witt_dot(p, q, cfg); };
    return br(u, dot(x, y)) - dot(br(u, x), y) - dot(x, br(u, y));
}

GradedElement witt_curly_direct(const GradedElement& x, const GradedElement& y, const GradedElement& u,
                                const WittConfig& cfg)
{
    auto br = [&](const GradedElement& p, const GradedElement& q) { return witt_bracket(p, q, cfg); };
    auto dot = [&](const GradedElement& p, const GradedElement& q) { return witt_dot(p, q, cfg); };
    return dot(u, br(x, y)) - br(dot(u, x), y) - br(x, dot(u, y));
}

}  // namespace kantorkit
