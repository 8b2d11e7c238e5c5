#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cofrob/cli.hpp"
#include "cofrob/corpus.hpp"
#include "cofrob/error.hpp"
#include "cofrob/exchange.hpp"

using namespace cofrob;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string last_line(const std::string& s)
{
    auto end = s.find_last_not_of('\n');
    auto start = s.rfind('\n', end);
    return s.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

bool has_line(const std::string& s, const std::string& line)
{
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);)
        if (l == line)
            return true;
    return false;
}

std::filesystem::path temp_file(const std::string& name, const std::string& text)
{
    auto dir = std::filesystem::temp_directory_path() / "cofrob-tests";
    std::filesystem::create_directories(dir);
    auto p = dir / name;
    std::ofstream(p) << text;
    return p;
}

const char* grouplike_doc = R"({
  "kind": "coalgebra",
  "name": "k{g}",
  "dim": 1,
  "basis": ["g"],
  "delta": [[0, 0, 0, "1"]],
  "counit": ["1"]
})";

}  // namespace

TEST_CASE("grouplike document parses and validates")
{
    Coalgebra c = exchange::parse_coalgebra(grouplike_doc);
    CHECK(c.dim() == 1);
    CHECK(c.name() == "k{g}");
    CHECK(validate(c).ok());
    CHECK(exchange::kind_of(grouplike_doc) == "coalgebra");
}

TEST_CASE("missing counit is named")
{
    std::string doc = R"({"kind": "coalgebra", "name": "x", "dim": 1, "basis": ["g"], "delta": [[0, 0, 0, "1"]]})";
    try {
        exchange::parse_coalgebra(doc);
        FAIL("expected a parse error");
    }
    catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("counit") != std::string::npos);
        CHECK(std::string(e.what()).find("missing") != std::string::npos);
    }
}

TEST_CASE("syntax and field errors carry locations")
{
    try {
        exchange::parse_coalgebra("{\n  \"kind\": \"coalgebra\",\n  \"dim\": 1,,\n}");
        FAIL("expected a parse error");
    }
    catch (const ParseError& e) {
        CHECK(e.location().find("line 3") != std::string::npos);
    }
    std::string bad_index = R"({"kind": "coalgebra", "name": "x", "dim": 1, "basis": ["g"],
        "delta": [[0, 0, 5, "1"]], "counit": ["1"]})";
    try {
        exchange::parse_coalgebra(bad_index);
        FAIL("expected a parse error");
    }
    catch (const ParseError& e) {
        CHECK(e.location() == "delta[0][2]");
    }
    std::string bad_scalar = R"({"kind": "coalgebra", "name": "x", "dim": 1, "basis": ["g"],
        "delta": [[0, 0, 0, "2/4"]], "counit": ["1"]})";
    CHECK_THROWS_AS(exchange::parse_coalgebra(bad_scalar), ParseError);
    std::string wrong_kind = R"({"kind": "comodule"})";
    CHECK_THROWS_AS(exchange::parse_coalgebra(wrong_kind), ParseError);
}

TEST_CASE("axiom violations are reported with basis indices")
{
    std::string doc = R"({"kind": "coalgebra", "name": "x", "dim": 2, "basis": ["g", "h"],
        "delta": [[0, 0, 0, "1"], [1, 1, 1, "1"]], "counit": ["1", "2"]})";
    try {
        exchange::parse_coalgebra(doc);
        FAIL("expected invalid input");
    }
    catch (const InvalidInput& e) {
        CHECK(std::string(e.what()).find("counit") != std::string::npos);
    }
    CHECK_NOTHROW(exchange::parse_coalgebra(doc, false));
}

TEST_CASE("emit is canonical and round-trips")
{
    for (const auto& e : corpus::coalgebras()) {
        CAPTURE(e.coalgebra.name());
        std::string once = exchange::emit(e.coalgebra);
        Coalgebra back = exchange::parse_coalgebra(once);
        CHECK(back == e.coalgebra);
        CHECK(exchange::emit(back) == once);
    }
    for (const auto& h : corpus::hopf_algebras()) {
        CAPTURE(h.name());
        std::string once = exchange::emit(h);
        HopfAlgebra back = exchange::parse_hopf(once);
        CHECK(back.antipode == h.antipode);
        CHECK(back.algebra.mult_tensor() == h.algebra.mult_tensor());
        CHECK(exchange::emit(back) == once);
        // a hopf document is also read as its coalgebra
        CHECK(exchange::parse_coalgebra(once) == h.coalgebra);
    }
    // a hand-written document with a different layout canonicalizes
    std::string loose = R"({"counit": ["1"], "delta": [[0,0,0,"1"]], "basis": ["g"], "dim": 1,
        "name": "k{g}", "kind": "coalgebra"})";
    std::string c1 = exchange::emit(exchange::parse_coalgebra(loose));
    CHECK(c1 == exchange::emit(exchange::parse_coalgebra(c1)));
    CHECK(c1 == exchange::emit(exchange::parse_coalgebra(grouplike_doc)));
}

TEST_CASE("comodule, bicomodule and subspace documents")
{
    Coalgebra c = corpus::lam_dual(Scalar(2));
    Comodule r = regular_comodule(c);
    std::string m = exchange::emit(r);
    Comodule back = exchange::parse_comodule(m, c);
    CHECK(back.coaction() == r.coaction());
    CHECK(exchange::emit(back) == m);
    CHECK_THROWS_AS(exchange::parse_comodule(m, matrix_coalgebra(2)), InvalidInput);

    Bicomodule b = rat_dual_bicomodule(c);
    std::string bd = exchange::emit(b);
    Bicomodule bb = exchange::parse_bicomodule(bd, c);
    CHECK(bb.left == b.left);
    CHECK(bb.right == b.right);

    Subspace s = Subspace::span(4, {{1, 0, 0, 0}, {0, Scalar(1, 2), 0, 1}});
    std::string sd = exchange::emit(s, c);
    CHECK(exchange::parse_subspace(sd, c) == s);
}

TEST_CASE("cli: verdicts, exit codes and key-value output")
{
    Run sym = run({"is-symmetric", "@Mc(2)"});
    CHECK(sym.code == 0);
    CHECK(last_line(sym.out) == "symmetric: yes");
    CHECK(sym.out.find("gram: ") != std::string::npos);

    Run no = run({"is-symmetric", "@lam-dual(2)"});
    CHECK(no.code == 0);
    CHECK(last_line(no.out) == "symmetric: no");

    Run h4 = run({"hopf", "@H4"});
    CHECK(h4.code == 0);
    CHECK(has_line(h4.out, "unimodular(on H): no"));
    CHECK(has_line(h4.out, "symmetric-as-coalgebra: no"));
    CHECK(has_line(h4.out, "S2 inner in H: yes"));
    CHECK(has_line(h4.out, "S2 inner in H*: yes"));

    CHECK(run({"is-cofrobenius", "@path-A2"}).out.find("cofrobenius: no") != std::string::npos);
    CHECK(run({"ring", "@dual-numbers"}).code == 0);
    CHECK(run({"nakayama", "@Mc(2)"}).out.find("inner: yes") != std::string::npos);
    CHECK(last_line(run({"coextend", "@dual-numbers"}).out) == "symmetric: yes");
    CHECK(last_line(run({"brauer", "@kC2"}).out) == "F_equiv_G: yes");
    CHECK(run({"info", "@kV4"}).out.find("grouplikes_found: 4") != std::string::npos);
}

TEST_CASE("cli: files, corrupted input and parent references")
{
    auto good = temp_file("good.json", exchange::emit(corpus::path_a2()));
    Run v = run({"validate", good.string()});
    CHECK(v.code == 0);
    CHECK(last_line(v.out) == "valid: yes");

    std::string broken = exchange::emit(corpus::path_a2());
    auto pos = broken.find("[2, 2, 1, \"1\"]");
    REQUIRE(pos != std::string::npos);
    broken.replace(pos, 14, "[2, 2, 1, \"2\"]");
    auto bad = temp_file("bad.json", broken);
    Run bv = run({"validate", bad.string()});
    CHECK(bv.code == 2);
    CHECK(last_line(bv.out) == "valid: no");
    CHECK(bv.out.find("violation: ") != std::string::npos);
    CHECK(run({"is-symmetric", bad.string()}).code == 2);

    auto syntax = temp_file("syntax.json", "{\"kind\": \"coalgebra\",\n \"dim\": }");
    Run sv = run({"info", syntax.string()});
    CHECK(sv.code == 2);
    CHECK(sv.err.find("line 2") != std::string::npos);

    auto sub = temp_file("sub.json", exchange::emit(Subspace::span(3, {{1, 0, 0}, {0, 1, 0}}), corpus::path_a2()));
    Run w = run({"wedge", good.string(), "--sub", sub.string()});
    CHECK(w.code == 0);
    CHECK(has_line(w.out, "a_infinity_dim: 3"));
    CHECK(has_line(w.out, "steps: 2"));
    CHECK(run({"validate", sub.string()}).code == 2);
    CHECK(run({"validate", sub.string(), "--parent", good.string()}).code == 0);

    auto out = std::filesystem::temp_directory_path() / "cofrob-tests" / "d.json";
    CHECK(run({"coextend", good.string(), "-o", out.string()}).code == 0);
    std::ifstream in(out);
    std::stringstream d;
    d << in.rdbuf();
    Coalgebra dc = exchange::parse_coalgebra(d.str());
    CHECK(dc.dim() == 6);

    CHECK(run({}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"info", "@no-such-instance"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli: fixed seed gives byte-identical output")
{
    for (const char* cmd : {"is-symmetric", "is-cofrobenius", "nakayama", "info"})
        for (const char* inst : {"@Mc(2)", "@lam-dual(2)", "@kS3"}) {
            CAPTURE(cmd);
            CAPTURE(inst);
            Run a = run({cmd, inst, "--seed", "17"}), b = run({cmd, inst, "--seed", "17"});
            CHECK(a.out == b.out);
            CHECK(a.code == b.code);
        }
    Run h1 = run({"hopf", "@k^S3", "--seed", "3"}), h2 = run({"hopf", "@k^S3", "--seed", "3"});
    CHECK(h1.out == h2.out);
}
