#include "closurelab/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "closurelab/errors.hpp"

namespace closurelab {

namespace {

struct Token
{
    std::string text;
    std::size_t column; // 1-based
};

std::vector<Token> tokenize(std::string_view line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i >= line.size())
            break;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        out.push_back({std::string(line.substr(start, i - start)), start + 1});
    }
    return out;
}

Rational parse_token(const Token& t, std::size_t line)
{
    try {
        return parse_rational(t.text);
    } catch (const ContractViolation&) {
        throw ParseError("expected a rational number, got '" + t.text + "'", line, t.column);
    }
}

std::size_t parse_count(const Token& t, std::size_t line)
{
    if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("expected a nonnegative integer, got '" + t.text + "'", line, t.column);
    try {
        return std::stoul(t.text);
    } catch (const std::exception&) {
        throw ParseError("integer out of range: '" + t.text + "'", line, t.column);
    }
}

std::string term(const Rational& c, std::size_t j, bool first)
{
    std::string var = "x" + std::to_string(j + 1);
    Rational mag = abs(c);
    std::string body = mag == 1 ? var : to_string(mag) + " " + var;
    if (first)
        return sgn(c) < 0 ? "-" + body : body;
    return (sgn(c) < 0 ? " - " : " + ") + body;
}

class InequalityParser
{
  public:
    InequalityParser(std::string_view text, std::size_t n, std::size_t line) : s_(text), n_(n), line_(line) {}

    Inequality parse()
    {
        QVector normal(n_);
        bool first = true;
        while (true) {
            skip();
            if (at_relation())
                break;
            if (eof())
                fail("expected '<=' or '>='");
            Rational sign(1);
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-')
                    sign = -1;
                ++p_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-' between terms");
            }
            Rational coeff(1);
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff = number();
                skip();
                if (peek() == '*') {
                    ++p_;
                    skip();
                }
            }
            std::size_t j = variable();
            normal[j] += sign * coeff;
            first = false;
        }
        if (first)
            fail("expected at least one term");
        bool ge = s_[p_] == '>';
        p_ += 2;
        skip();
        Rational sign(1);
        if (peek() == '+' || peek() == '-') {
            if (peek() == '-')
                sign = -1;
            ++p_;
            skip();
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a rational right-hand side");
        Rational rhs = sign * number();
        skip();
        if (!eof())
            fail("unexpected trailing text");
        if (ge)
            return Inequality(-normal, -rhs);
        return Inequality(normal, rhs);
    }

  private:
    bool eof() const { return p_ >= s_.size(); }
    char peek() const { return eof() ? '\0' : s_[p_]; }
    void skip()
    {
        while (!eof() && std::isspace(static_cast<unsigned char>(s_[p_])))
            ++p_;
    }
    bool at_relation() const
    {
        return p_ + 1 < s_.size() && (s_[p_] == '<' || s_[p_] == '>') && s_[p_ + 1] == '=';
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, p_ + 1); }

    Rational number()
    {
        std::size_t start = p_;
        while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/'))
            ++p_;
        std::string_view tok = s_.substr(start, p_ - start);
        try {
            return parse_rational(tok);
        } catch (const ContractViolation&) {
            throw ParseError("malformed rational '" + std::string(tok) + "'", line_, start + 1);
        }
    }

    std::size_t variable()
    {
        if (peek() != 'x')
            fail("expected a variable x1..x" + std::to_string(n_));
        std::size_t start = p_++;
        std::size_t digits = p_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
            ++p_;
        if (digits == p_)
            fail("expected a variable index");
        std::size_t idx = std::stoul(std::string(s_.substr(digits, p_ - digits)));
        if (idx < 1 || idx > n_)
            throw ParseError("variable x" + std::to_string(idx) + " out of range x1..x" + std::to_string(n_), line_,
                             start + 1);
        return idx - 1;
    }

    std::string_view s_;
    std::size_t n_;
    std::size_t line_;
    std::size_t p_ = 0;
};

struct Line
{
    std::size_t number;
    std::vector<Token> tokens;
};

// "<= b" / ">= b" ending a row of n coefficients.
Inequality parse_row(const Line& l, std::size_t n, bool covering)
{
    const auto& t = l.tokens;
    if (t.size() != n + 2) {
        std::size_t col = t.size() > n + 2 ? t[n + 2].column : (t.empty() ? 1 : t.back().column);
        throw ParseError("expected " + std::to_string(n) + " coefficients, a relation and a right-hand side", l.number,
                         col);
    }
    QVector a(n);
    for (std::size_t j = 0; j < n; ++j)
        a[j] = parse_token(t[j], l.number);
    const Token& rel = t[n];
    if (rel.text != "<=" && rel.text != ">=")
        throw ParseError("expected '<=' or '>=', got '" + rel.text + "'", l.number, rel.column);
    if (covering && rel.text != ">=")
        throw ParseError("covering rows use '>='", l.number, rel.column);
    Rational b = parse_token(t[n + 1], l.number);
    return rel.text == ">=" ? Inequality(-a, -b) : Inequality(a, b);
}

QVector parse_vector(const Line& l, std::size_t first, std::size_t count)
{
    const auto& t = l.tokens;
    if (t.size() != first + count) {
        std::size_t col = t.size() > first + count ? t[first + count].column : t.back().column;
        throw ParseError("expected " + std::to_string(count) + " numbers", l.number, col);
    }
    QVector v(count);
    for (std::size_t j = 0; j < count; ++j)
        v[j] = parse_token(t[first + j], l.number);
    return v;
}

} // namespace

std::string format_linear(const QVector& coefficients)
{
    std::string out;
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
        if (sgn(coefficients[j]) == 0)
            continue;
        out += term(coefficients[j], j, out.empty());
    }
    return out.empty() ? "0" : out;
}

std::string format_le(const Inequality& ineq)
{
    return format_linear(ineq.normal()) + " <= " + to_string(ineq.rhs());
}

std::string format_ge(const Inequality& ineq)
{
    return format_linear(-ineq.normal()) + " >= " + to_string(Rational(-ineq.rhs()));
}

std::string format_point(const QVector& v)
{
    return "(" + to_string(v, ", ") + ")";
}

std::string format_point(const LatticePoint& p)
{
    return format_point(to_qvector(p));
}

std::vector<Inequality> covering_display_order(std::vector<Inequality> facets)
{
    auto ge_key = [](const Inequality& f) { return -f.key(); };
    std::stable_sort(facets.begin(), facets.end(), [&](const Inequality& a, const Inequality& b) {
        bool sa = a.is_sign_constraint(), sb = b.is_sign_constraint();
        if (sa != sb)
            return sb;
        if (sa)
            return a.key() < b.key();
        return ge_key(a) < ge_key(b);
    });
    return facets;
}

Inequality parse_inequality(std::string_view text, std::size_t n, std::size_t line)
{
    return InequalityParser(text, n, line).parse();
}

std::string to_string(InstanceKind kind)
{
    switch (kind) {
    case InstanceKind::Covering:
        return "covering";
    case InstanceKind::Cone:
        return "cone";
    case InstanceKind::HRep:
        return "hrep";
    case InstanceKind::VRep:
        return "vrep";
    case InstanceKind::PointSet:
        return "pointset";
    }
    return "covering";
}

InstanceFile parse_instance(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        auto tokens = tokenize(raw);
        if (!tokens.empty())
            lines.push_back({number, std::move(tokens)});
        pos = end + 1;
    }

    std::optional<InstanceKind> kind;
    std::optional<std::size_t> n, m;
    std::size_t i = 0;
    for (; i < lines.size(); ++i) {
        const auto& t = lines[i].tokens;
        const std::string& key = t[0].text;
        if (key != "kind" && key != "n" && key != "m")
            break;
        if (t.size() != 2)
            throw ParseError("header '" + key + "' takes one value", lines[i].number,
                             t.size() > 2 ? t[2].column : t[0].column);
        if (key == "kind") {
            static const std::pair<const char*, InstanceKind> kinds[] = {
                {"covering", InstanceKind::Covering}, {"cone", InstanceKind::Cone},     {"hrep", InstanceKind::HRep},
                {"vrep", InstanceKind::VRep},         {"pointset", InstanceKind::PointSet},
            };
            auto it = std::find_if(std::begin(kinds), std::end(kinds),
                                   [&](const auto& k) { return t[1].text == k.first; });
            if (it == std::end(kinds))
                throw ParseError("unknown kind '" + t[1].text + "'", lines[i].number, t[1].column);
            kind = it->second;
        } else if (key == "n") {
            n = parse_count(t[1], lines[i].number);
        } else {
            m = parse_count(t[1], lines[i].number);
        }
    }
    std::size_t last = lines.empty() ? 1 : lines[std::min(i, lines.size() - 1)].number;
    if (!kind)
        throw ParseError("missing 'kind' header", last, 1);
    if (!n)
        throw ParseError("missing 'n' header", last, 1);
    if (*kind == InstanceKind::Covering && !m)
        throw ParseError("covering instances need an 'm' header", last, 1);

    std::vector<Line> payload(lines.begin() + static_cast<std::ptrdiff_t>(i), lines.end());
    if (m && payload.size() != *m) {
        std::size_t at = payload.size() > *m ? payload[*m].number : (lines.empty() ? 1 : lines.back().number + 1);
        throw ParseError("expected " + std::to_string(*m) + " payload lines, found " + std::to_string(payload.size()),
                         at, 1);
    }

    InstanceFile f;
    f.kind = *kind;
    f.n = *n;
    switch (*kind) {
    case InstanceKind::Covering: {
        std::vector<QVector> rows;
        QVector d(payload.size());
        for (std::size_t r = 0; r < payload.size(); ++r) {
            Inequality row = parse_row(payload[r], *n, true);
            rows.push_back(-row.normal());
            d[r] = -row.rhs();
        }
        f.covering = CoveringInstance(QMatrix::from_rows(rows, *n), d);
        break;
    }
    case InstanceKind::Cone:
        for (const auto& l : payload)
            f.generators.push_back(parse_vector(l, 0, *n + 1));
        break;
    case InstanceKind::HRep: {
        HPolyhedron P(*n);
        for (const auto& l : payload)
            P.add(parse_row(l, *n, false));
        f.hrep = std::move(P);
        break;
    }
    case InstanceKind::VRep:
        f.vrep.dim = *n;
        for (const auto& l : payload) {
            const Token& tag = l.tokens[0];
            if (tag.text == "V")
                f.vrep.vertices.push_back(parse_vector(l, 1, *n));
            else if (tag.text == "R")
                f.vrep.rays.push_back(parse_vector(l, 1, *n));
            else
                throw ParseError("expected 'V' or 'R', got '" + tag.text + "'", l.number, tag.column);
        }
        break;
    case InstanceKind::PointSet:
        for (const auto& l : payload) {
            QVector v = parse_vector(l, 0, *n);
            LatticePoint p;
            for (std::size_t j = 0; j < *n; ++j) {
                if (v[j].get_den() != 1 || !v[j].get_num().fits_slong_p())
                    throw ParseError("expected an integer", l.number, l.tokens[j].column);
                p.push_back(v[j].get_num().get_si());
            }
            f.points.push_back(std::move(p));
        }
        break;
    }
    return f;
}

InstanceFile read_instance_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ContractViolation("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string write_instance(const CoveringInstance& Q)
{
    std::string out = "kind covering\nn " + std::to_string(Q.cols()) + "\nm " + std::to_string(Q.rows()) + "\n";
    for (std::size_t i = 0; i < Q.rows(); ++i)
        out += to_string(Q.matrix().row(i)) + " >= " + to_string(Q.demand()[i]) + "\n";
    return out;
}

std::string write_cone_instance(std::size_t n, const std::vector<QVector>& generators)
{
    std::string out = "kind cone\nn " + std::to_string(n) + "\n";
    for (const auto& g : generators)
        out += to_string(g) + "\n";
    return out;
}

} // namespace closurelab
