#include "cofrob/exchange.hpp"

#include <sstream>

#include <json.hpp>

#include "cofrob/error.hpp"

namespace cofrob::exchange {

namespace {

using nlohmann::json;

std::string line_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        }
        else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json load(std::string_view text)
{
    try {
        json j = json::parse(text);
        if (!j.is_object())
            throw ParseError("line 1, column 1", "document must be a JSON object");
        return j;
    }
    catch (const json::parse_error& e) {
        // e.byte is one past the offending character
        std::string what = e.what();
        auto cut = what.find("; ");
        std::string detail = cut == std::string::npos ? what : what.substr(cut + 2);
        throw ParseError(line_column(text, e.byte == 0 ? 0 : e.byte - 1), "syntax error: " + detail);
    }
}

const json& field(const json& j, const std::string& key, const std::string& path = "")
{
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(path.empty() ? key : path + "." + key, "missing required field");
    return *it;
}

std::size_t as_index(const json& v, std::size_t bound, const std::string& path)
{
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ParseError(path, "expected a non-negative integer index");
    auto i = static_cast<std::size_t>(v.get<long long>());
    if (i >= bound)
        throw ParseError(path, "index " + std::to_string(i) + " out of range (bound " + std::to_string(bound) + ")");
    return i;
}

Scalar as_scalar(const json& v, const std::string& path)
{
    if (!v.is_string())
        throw ParseError(path, "expected a scalar string \"p/q\"");
    try {
        return Scalar::parse(v.get<std::string>());
    }
    catch (const ParseError& e) {
        throw ParseError(path, e.what());
    }
}

std::string as_string(const json& v, const std::string& path)
{
    if (!v.is_string())
        throw ParseError(path, "expected a string");
    return v.get<std::string>();
}

const json& as_array(const json& v, const std::string& path)
{
    if (!v.is_array())
        throw ParseError(path, "expected an array");
    return v;
}

std::size_t read_dim(const json& j, const std::string& key = "dim")
{
    const json& d = field(j, key);
    if (!d.is_number_integer() || d.get<long long>() < 0)
        throw ParseError(key, "expected a non-negative integer");
    return static_cast<std::size_t>(d.get<long long>());
}

void require_kind(const json& j, const std::string& kind)
{
    std::string k = as_string(field(j, "kind"), "kind");
    if (k != kind)
        throw ParseError("kind", "expected \"" + kind + "\", found \"" + k + "\"");
}

std::vector<std::string> read_basis(const json& j, std::size_t dim, const std::string& prefix)
{
    if (!j.contains("basis"))
        return default_labels(prefix, dim);
    const json& b = as_array(j["basis"], "basis");
    if (b.size() != dim)
        throw ParseError("basis", "has " + std::to_string(b.size()) + " labels, expected " + std::to_string(dim));
    std::vector<std::string> out;
    for (std::size_t i = 0; i < b.size(); ++i)
        out.push_back(as_string(b[i], "basis[" + std::to_string(i) + "]"));
    return out;
}

Vector read_vector(const json& v, std::size_t dim, const std::string& path)
{
    as_array(v, path);
    if (v.size() != dim)
        throw ParseError(path, "has " + std::to_string(v.size()) + " entries, expected " + std::to_string(dim));
    Vector out;
    for (std::size_t i = 0; i < dim; ++i)
        out.push_back(as_scalar(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

Tensor3 read_quads(const json& j, const std::string& key, std::size_t d0, std::size_t d1, std::size_t d2)
{
    const json& arr = as_array(field(j, key), key);
    Tensor3 t(d0, d1, d2);
    for (std::size_t r = 0; r < arr.size(); ++r) {
        std::string p = key + "[" + std::to_string(r) + "]";
        const json& e = as_array(arr[r], p);
        if (e.size() != 4)
            throw ParseError(p, "expected [i, j, k, \"p/q\"]");
        std::size_t a = as_index(e[0], d0, p + "[0]");
        std::size_t b = as_index(e[1], d1, p + "[1]");
        std::size_t c = as_index(e[2], d2, p + "[2]");
        t(a, b, c) += as_scalar(e[3], p + "[3]");
    }
    return t;
}

void check(const AxiomReport& r, const std::string& what)
{
    if (r.ok())
        return;
    std::ostringstream os;
    os << what << " violates " << r.violations.size() << " axiom instance(s):";
    for (const auto& v : r.violations)
        os << " [" << v.axiom << " at basis index " << v.index << (v.detail.empty() ? "" : ": " + v.detail) << "]";
    throw InvalidInput(os.str());
}

void require_parent(const json& j, const Coalgebra& parent)
{
    std::string p = as_string(field(j, "parent"), "parent");
    if (p != parent.name())
        throw ParseError("parent", "refers to \"" + p + "\" but the supplied coalgebra is \"" + parent.name() + "\"");
}

// ---------------------------------------------------------------- emit

std::string quote(const std::string& s)
{
    return json(s).dump();
}

std::string scalar_list(const Vector& v)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? ", " : "") + quote(v[i].str());
    return out + "]";
}

std::string string_list(const std::vector<std::string>& v)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? ", " : "") + quote(v[i]);
    return out + "]";
}

std::string quads(const Tensor3& t)
{
    std::vector<std::string> rows;
    for (std::size_t a = 0; a < t.extent(0); ++a)
        for (std::size_t b = 0; b < t.extent(1); ++b)
            for (std::size_t c = 0; c < t.extent(2); ++c)
                if (!t(a, b, c).is_zero())
                    rows.push_back("[" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) +
                                   ", " + quote(t(a, b, c).str()) + "]");
    if (rows.empty())
        return "[]";
    std::string out = "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
        out += "    " + rows[i] + (i + 1 < rows.size() ? ",\n" : "\n");
    return out + "  ]";
}

std::string rows_of(const std::vector<Vector>& rows)
{
    if (rows.empty())
        return "[]";
    std::string out = "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
        out += "    " + scalar_list(rows[i]) + (i + 1 < rows.size() ? ",\n" : "\n");
    return out + "  ]";
}

std::string object(const std::vector<std::pair<std::string, std::string>>& fields)
{
    std::string out = "{\n";
    for (std::size_t i = 0; i < fields.size(); ++i)
        out += "  " + quote(fields[i].first) + ": " + fields[i].second + (i + 1 < fields.size() ? ",\n" : "\n");
    return out + "}\n";
}

}  // namespace

std::string kind_of(std::string_view text)
{
    return as_string(field(load(text), "kind"), "kind");
}

Coalgebra parse_coalgebra(std::string_view text, bool check_axioms)
{
    json j = load(text);
    std::string kind = as_string(field(j, "kind"), "kind");
    if (kind != "coalgebra" && kind != "hopf")
        throw ParseError("kind", "expected \"coalgebra\" or \"hopf\", found \"" + kind + "\"");
    std::size_t n = read_dim(j);
    std::string name = as_string(field(j, "name"), "name");
    Coalgebra c(name, read_basis(j, n, "c"), read_quads(j, "delta", n, n, n), read_vector(field(j, "counit"), n, "counit"));
    if (check_axioms)
        check(validate(c), "coalgebra " + name);
    return c;
}

Algebra parse_algebra(std::string_view text, bool check_axioms)
{
    json j = load(text);
    std::string kind = as_string(field(j, "kind"), "kind");
    if (kind != "algebra" && kind != "hopf")
        throw ParseError("kind", "expected \"algebra\" or \"hopf\", found \"" + kind + "\"");
    std::size_t n = read_dim(j);
    std::string name = as_string(field(j, "name"), "name");
    Algebra a(name, read_basis(j, n, "e"), read_quads(j, "mult", n, n, n), read_vector(field(j, "unit"), n, "unit"));
    if (check_axioms)
        check(validate(a), "algebra " + name);
    return a;
}

HopfAlgebra parse_hopf(std::string_view text, bool check_axioms)
{
    json j = load(text);
    require_kind(j, "hopf");
    Coalgebra c = parse_coalgebra(text, false);
    Algebra a = parse_algebra(text, false);
    const std::size_t n = c.dim();
    const json& s = as_array(field(j, "antipode"), "antipode");
    if (s.size() != n)
        throw ParseError("antipode", "expected " + std::to_string(n) + " rows");
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < n; ++i)
        cols.push_back(read_vector(s[i], n, "antipode[" + std::to_string(i) + "]"));
    HopfAlgebra h{c, a, Matrix::from_columns(n, cols)};
    if (check_axioms)
        check(validate(h), "hopf algebra " + c.name());
    return h;
}

Comodule parse_comodule(std::string_view text, const Coalgebra& parent, bool check_axioms)
{
    json j = load(text);
    require_kind(j, "comodule");
    require_parent(j, parent);
    std::size_t d = read_dim(j);
    std::string name = as_string(field(j, "name"), "name");
    Comodule m(name, parent, read_basis(j, d, "m"), read_quads(j, "coaction", d, d, parent.dim()));
    if (check_axioms)
        check(validate(m), "comodule " + name);
    return m;
}

Bicomodule parse_bicomodule(std::string_view text, const Coalgebra& parent, bool check_axioms)
{
    json j = load(text);
    require_kind(j, "bicomodule");
    require_parent(j, parent);
    std::size_t d = read_dim(j), n = parent.dim();
    Bicomodule m{as_string(field(j, "name"), "name"), parent, read_basis(j, d, "m"),
                 read_quads(j, "left_coaction", d, n, d), read_quads(j, "right_coaction", d, d, n)};
    if (check_axioms)
        check(validate(m), "bicomodule " + m.name);
    return m;
}

Subspace parse_subspace(std::string_view text, const Coalgebra& parent)
{
    json j = load(text);
    require_kind(j, "subspace");
    require_parent(j, parent);
    std::size_t n = read_dim(j, "ambient_dim");
    if (n != parent.dim())
        throw ParseError("ambient_dim", "does not match the dimension of " + parent.name());
    const json& rows = as_array(field(j, "basis"), "basis");
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < rows.size(); ++i)
        vs.push_back(read_vector(rows[i], n, "basis[" + std::to_string(i) + "]"));
    return Subspace::span(n, vs);
}

std::string emit(const Coalgebra& c)
{
    return object({{"kind", quote("coalgebra")},
                   {"name", quote(c.name())},
                   {"dim", std::to_string(c.dim())},
                   {"basis", string_list(c.basis_names())},
                   {"delta", quads(c.delta_tensor())},
                   {"counit", scalar_list(c.counit())}});
}

std::string emit(const Algebra& a)
{
    return object({{"kind", quote("algebra")},
                   {"name", quote(a.name())},
                   {"dim", std::to_string(a.dim())},
                   {"basis", string_list(a.basis_names())},
                   {"mult", quads(a.mult_tensor())},
                   {"unit", scalar_list(a.unit())}});
}

std::string emit(const HopfAlgebra& h)
{
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < h.dim(); ++i)
        rows.push_back(h.antipode.column(i));
    return object({{"kind", quote("hopf")},
                   {"name", quote(h.name())},
                   {"dim", std::to_string(h.dim())},
                   {"basis", string_list(h.coalgebra.basis_names())},
                   {"delta", quads(h.coalgebra.delta_tensor())},
                   {"counit", scalar_list(h.coalgebra.counit())},
                   {"mult", quads(h.algebra.mult_tensor())},
                   {"unit", scalar_list(h.algebra.unit())},
                   {"antipode", rows_of(rows)}});
}

std::string emit(const Comodule& m)
{
    return object({{"kind", quote("comodule")},
                   {"name", quote(m.name())},
                   {"parent", quote(m.parent().name())},
                   {"dim", std::to_string(m.dim())},
                   {"basis", string_list(m.basis_names())},
                   {"coaction", quads(m.coaction())}});
}

std::string emit(const Bicomodule& m)
{
    return object({{"kind", quote("bicomodule")},
                   {"name", quote(m.name)},
                   {"parent", quote(m.parent.name())},
                   {"dim", std::to_string(m.dim())},
                   {"basis", string_list(m.basis)},
                   {"left_coaction", quads(m.left)},
                   {"right_coaction", quads(m.right)}});
}

std::string emit(const Subspace& s, const Coalgebra& parent)
{
    return object({{"kind", quote("subspace")},
                   {"parent", quote(parent.name())},
                   {"ambient_dim", std::to_string(s.ambient_dim())},
                   {"basis", rows_of(s.vectors())}});
}

}  // namespace cofrob::exchange
