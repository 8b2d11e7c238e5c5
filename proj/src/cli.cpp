#include "cofrob/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "cofrob/brauer.hpp"
#include "cofrob/coextension.hpp"
#include "cofrob/corpus.hpp"
#include "cofrob/error.hpp"
#include "cofrob/exchange.hpp"
#include "cofrob/nakayama.hpp"
#include "cofrob/ring.hpp"

namespace cofrob {

namespace {

std::string read_text(const std::string& path)
{
    if (!path.empty() && path.front() == '@') {
        std::string name = path.substr(1);
        for (const auto& h : corpus::hopf_algebras())
            if (h.name() == name)
                return exchange::emit(h);
        return exchange::emit(corpus::coalgebra_by_name(name));
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InvalidInput("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InvalidInput("cannot write " + path);
    out << text;
}

struct Report {
    std::ostream& out;
    void operator()(const std::string& key, const std::string& value) const { out << key << ": " << value << "\n"; }
};

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

std::string verdict(SearchStatus s)
{
    switch (s) {
    case SearchStatus::found:
        return "yes";
    case SearchStatus::absent:
        return "no";
    case SearchStatus::inconclusive:
        return "inconclusive";
    }
    return "?";
}

std::string dims(const std::vector<std::size_t>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

SearchOptions search_options(std::uint64_t seed, bool grid)
{
    SearchOptions o;
    o.seed = seed;
    o.grid_only = grid;
    return o;
}

int cmd_validate(const std::string& file, const std::string& parent_file, Report kv)
{
    std::string text = read_text(file);
    std::string kind = exchange::kind_of(text);
    kv("kind", kind);
    AxiomReport rep;
    if (kind == "coalgebra") {
        Coalgebra c = exchange::parse_coalgebra(text, false);
        kv("name", c.name());
        kv("dim", std::to_string(c.dim()));
        rep = validate(c);
    }
    else if (kind == "hopf") {
        HopfAlgebra h = exchange::parse_hopf(text, false);
        kv("name", h.name());
        kv("dim", std::to_string(h.dim()));
        rep = validate(h);
    }
    else if (kind == "algebra") {
        Algebra a = exchange::parse_algebra(text, false);
        kv("name", a.name());
        kv("dim", std::to_string(a.dim()));
        rep = validate(a);
    }
    else if (kind == "comodule" || kind == "bicomodule" || kind == "subspace") {
        if (parent_file.empty())
            throw InvalidInput("validate: a " + kind + " document needs --parent FILE");
        Coalgebra c = exchange::parse_coalgebra(read_text(parent_file));
        if (kind == "comodule") {
            Comodule m = exchange::parse_comodule(text, c, false);
            kv("name", m.name());
            kv("dim", std::to_string(m.dim()));
            rep = validate(m);
        }
        else if (kind == "bicomodule") {
            Bicomodule m = exchange::parse_bicomodule(text, c, false);
            kv("name", m.name);
            kv("dim", std::to_string(m.dim()));
            rep = validate(m);
        }
        else {
            Subspace s = exchange::parse_subspace(text, c);
            kv("dim", std::to_string(s.dim()));
        }
    }
    else {
        throw ParseError("kind", "unknown document kind \"" + kind + "\"");
    }
    for (const auto& v : rep.violations)
        kv("violation", v.axiom + " at " + std::to_string(v.index) + (v.detail.empty() ? "" : " (" + v.detail + ")"));
    kv("valid", yes_no(rep.ok()));
    return rep.ok() ? 0 : 2;
}

int cmd_info(const Coalgebra& c, std::uint64_t seed, Report kv)
{
    kv("name", c.name());
    kv("dim", std::to_string(c.dim()));
    std::string labels;
    for (const auto& b : c.basis_names())
        labels += (labels.empty() ? "" : " ") + b;
    kv("basis", labels);
    Subspace coc = cocommutative_elements(c);
    kv("cocommutative_dim", std::to_string(coc.dim()));
    kv("cocommutative_basis", coc.basis().str());
    kv("cocommutative", yes_no(coc.dim() == c.dim()));
    auto g = grouplike_elements(c, seed);
    for (const auto& x : g)
        kv("grouplike", to_string(x));
    kv("grouplike_scan", "best-effort");
    kv("grouplikes_found", std::to_string(g.size()));
    return 0;
}

int cmd_cofrobenius(const Coalgebra& c, const SearchOptions& o, Report kv)
{
    auto space = balanced_form_space(c);
    kv("balanced_forms_dim", std::to_string(space.size()));
    auto d = is_cofrobenius(c, o);
    kv("search_phase", to_string(d.phase));
    if (d.witness)
        kv("gram", d.witness->form.gram.str());
    kv("cofrobenius", verdict(d.status));
    return 0;
}

int cmd_symmetric(const Coalgebra& c, const SearchOptions& o, Report kv)
{
    auto space = symmetric_balanced_form_space(c);
    kv("symmetric_forms_dim", std::to_string(space.size()));
    auto d = is_symmetric(c, o);
    kv("search_phase", to_string(d.phase));
    auto e = cocommutative_generator(c, o);
    kv("cocommutative_generator_search", verdict(e.status));
    if (e.witness)
        kv("cocommutative_generator", to_string(*e.witness));
    if (d.witness) {
        kv("gram", d.witness->gram.str());
        FrobeniusCertificate cert = make_certificate(*d.witness);
        Vector f = trace_map(cert);
        kv("trace_map", to_string(f));
        kv("trace_map_checks", yes_no(check_trace_map(cert, f).ok()));
    }
    if ((d.status == SearchStatus::found) != (e.status == SearchStatus::found) &&
        d.status != SearchStatus::inconclusive && e.status != SearchStatus::inconclusive)
        throw TheoremViolation("is-symmetric: form search and cocommutative generator disagree");
    kv("symmetric", verdict(d.status));
    return 0;
}

int cmd_ring(const Coalgebra& c, const SearchOptions& o, const std::string& out_file, Report kv)
{
    auto d = is_cofrobenius(c, o);
    if (!d.witness) {
        kv("cofrobenius", verdict(d.status));
        kv("ring", "no");
        return 0;
    }
    TransferredRing r = build_ring(*d.witness);
    kv("gram", d.witness->form.gram.str());
    kv("identity", to_string(r.identity));
    const std::size_t n = c.dim();
    const auto& names = c.basis_names();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            kv(names[a] + " o " + names[b], to_string(r.multiply(unit_vector(n, a), unit_vector(n, b))));
    kv("circ_equals_odot", "yes");
    kv("bimodule_law", yes_no(bimodule_law_check(r).empty()));
    kv("alpha_ring_isomorphism", yes_no(alpha_is_ring_isomorphism(r)));
    if (!out_file.empty()) {
        Algebra table(c.name() + "-circ", c.basis_names(), r.mult, r.identity);
        write_text(out_file, exchange::emit(table));
        kv("written", out_file);
    }
    kv("ring", "yes");
    return 0;
}

int cmd_nakayama(const Coalgebra& c, const SearchOptions& o, Report kv)
{
    auto d = is_cofrobenius(c, o);
    if (!d.witness) {
        kv("cofrobenius", verdict(d.status));
        kv("inner", "n/a");
        return 0;
    }
    NakayamaAuto na = nakayama(*d.witness);
    kv("gram", d.witness->form.gram.str());
    kv("sigma", na.sigma.str());
    kv("sigma_ring_automorphism", "yes");
    auto in = is_inner(na, o);
    kv("inner_search_phase", to_string(in.phase));
    if (in.witness)
        kv("u", to_string(*in.witness));
    kv("inner", verdict(in.status));
    return 0;
}

int cmd_coextend(const Coalgebra& c, const SearchOptions& o, const std::string& out_file, bool search, Report kv)
{
    EmbeddingReport rep = embedding_theorem_check(c, search, o);
    DualExtensionReport dr = dual_is_trivial_extension(c, rat_dual_bicomodule(c));
    kv("dim", std::to_string(rep.extension.dim()));
    kv("valid", yes_no(validate(rep.extension).ok()));
    kv("witness_gram", rep.alpha.str());
    kv("contains_C", yes_no(rep.subcoalgebra));
    kv("alpha_bimodule_map", yes_no(rep.left_linear && rep.right_linear));
    kv("alpha_bijective", yes_no(rep.bijective));
    kv("proof_identities", yes_no(rep.proof_identities));
    kv("dual_is_trivial_extension", yes_no(dr.ok()));
    if (search)
        kv("search", verdict(rep.search.status));
    if (!out_file.empty()) {
        write_text(out_file, exchange::emit(rep.extension));
        kv("written", out_file);
    }
    if (!rep.ok() || !dr.ok())
        throw TheoremViolation("coextend: the trivial coextension failed its symmetric witness checks");
    kv("symmetric", "yes");
    return 0;
}

int cmd_brauer(const Coalgebra& c, const std::string& comodule_file, const SearchOptions& o, Report kv)
{
    Comodule m = comodule_file.empty() ? regular_comodule(c) : exchange::parse_comodule(read_text(comodule_file), c);
    HomSpace f = compute_F(m), g = compute_G(m), h = compute_H(m);
    kv("comodule", m.name());
    kv("dim_M", std::to_string(m.dim()));
    kv("dim_F", std::to_string(f.dim()));
    kv("dim_G", std::to_string(g.dim()));
    kv("dim_H", std::to_string(h.dim()));
    EquivalenceReport eq = equivalence_FG(m);
    kv("alpha_beta_roundtrip", yes_no(eq.alpha_beta && eq.beta_alpha));
    kv("alpha_beta_linear", yes_no(eq.alpha_linear && eq.beta_linear));
    kv("beta_C_anti_isomorphism", yes_no(beta_C_anti_isomorphism(c)));
    GHReport gh = symmetric_via_GH(c, {m}, o);
    kv("symmetric", verdict(gh.symmetric));
    if (gh.symmetric == SearchStatus::found)
        kv("G_iso_H", yes_no(gh.samples.front().iso_verified));
    else
        kv("G_H_dim_mismatch", yes_no(gh.mismatch_found));
    if (!eq.ok())
        throw TheoremViolation("brauer: F and G are not equivalent on this comodule");
    kv("F_equiv_G", "yes");
    return 0;
}

int cmd_hopf(const HopfAlgebra& h, const SearchOptions& o, Report kv)
{
    kv("name", h.name());
    kv("dim", std::to_string(h.dim()));
    IntegralData in = integrals(h);
    kv("left_integral_on_H", in.left_on.basis().str());
    kv("right_integral_on_H", in.right_on.basis().str());
    kv("left_integral_in_H", in.left_in.basis().str());
    kv("right_integral_in_H", in.right_in.basis().str());
    kv("S2", h.s2().str());
    HopfSymmetry hs = hopf_symmetric_coalgebra(h, o);
    if (hs.inner.witness)
        kv("u", to_string(*hs.inner.witness));
    if (hs.form) {
        kv("symmetric_form", hs.form->str());
        kv("symmetric_form_checks", yes_no(hs.form_symmetric && hs.form_nondegenerate && hs.form_balanced));
    }
    AlgebraSymmetry as = symmetric_as_algebra(h, o);
    if (as.s2_inner.witness)
        kv("g", to_string(*as.s2_inner.witness));
    HInfinity hi = h_infinity(h);
    kv("H_infinity_dim", std::to_string(hi.a.space.dim()));
    kv("H_infinity_steps", std::to_string(hi.a.steps));
    kv("H_infinity_hopf_subalgebra", yes_no(hi.closure.ok()));
    if (!hs.agrees() && hs.direct != SearchStatus::inconclusive && hs.verdict != SearchStatus::inconclusive)
        throw TheoremViolation("hopf: integral criterion and direct form search disagree");
    kv("unimodular(on H)", yes_no(in.unimodular_on));
    kv("unimodular(in H)", yes_no(in.unimodular_in));
    kv("S2 inner in H*", verdict(hs.inner.status));
    kv("S2 inner in H", verdict(as.s2_inner.status));
    kv("symmetric-as-coalgebra", verdict(hs.verdict));
    kv("symmetric-as-algebra", verdict(as.criterion));
    return 0;
}

int cmd_wedge(const Coalgebra& c, const std::string& sub_file, std::size_t steps, Report kv)
{
    Subspace a = exchange::parse_subspace(read_text(sub_file), c);
    kv("dim_A", std::to_string(a.dim()));
    Subspace w = a;
    std::size_t limit = steps == 0 ? c.dim() + 1 : steps;
    for (std::size_t i = 2; i <= limit; ++i) {
        Subspace next = wedge(c, w, a);
        kv("wedge^" + std::to_string(i), std::to_string(next.dim()));
        bool stable = next == w;
        w = std::move(next);
        if (steps == 0 && stable)
            break;
    }
    bool sub = is_subcoalgebra(c, a);
    kv("subcoalgebra", yes_no(sub));
    if (sub) {
        AInfinity inf = a_infinity(c, a);
        kv("a_infinity_dim", std::to_string(inf.space.dim()));
        kv("a_infinity_trace", dims(inf.trace));
        kv("a_infinity_basis", inf.space.basis().str());
        kv("steps", std::to_string(inf.steps));
    }
    kv("stable", yes_no(wedge(c, w, a) == w));
    return 0;
}

int cmd_corpus(const std::string& name, const std::string& out_file, Report kv)
{
    if (name.empty()) {
        for (const auto& n : corpus::names())
            kv("instance", n);
        return 0;
    }
    std::string text = read_text("@" + name);
    if (out_file.empty())
        kv("document", "\n" + text);
    else {
        write_text(out_file, text);
        kv("written", out_file);
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact workbench for finite-dimensional coalgebras and Hopf algebras", "cofrob"};
    app.require_subcommand(1);
    std::string file, parent, comodule, sub, output, name;
    std::uint64_t seed = 0;
    std::size_t steps = 0;
    bool grid = false, no_search = false;

    auto with_file = [&](CLI::App* c) { c->add_option("file", file, "exchange document or @NAME")->required(); };
    auto with_seed = [&](CLI::App* c) {
        c->add_option("--seed", seed, "seed for randomized searches")->default_val(0);
        c->add_flag("--grid", grid, "skip the randomized phase and enumerate the grid");
    };

    auto* v = app.add_subcommand("validate", "axiom report");
    with_file(v);
    v->add_option("--parent", parent, "parent coalgebra for comodule/bicomodule/subspace documents");
    auto* info = app.add_subcommand("info", "dimension, cocommutative part, grouplike scan");
    with_file(info);
    with_seed(info);
    auto* cf = app.add_subcommand("is-cofrobenius", "co-Frobenius verdict with Gram witness");
    with_file(cf);
    with_seed(cf);
    auto* sym = app.add_subcommand("is-symmetric", "symmetric verdict with Gram witness");
    with_file(sym);
    with_seed(sym);
    auto* ring = app.add_subcommand("ring", "transferred ring: Cayley table, identity, bimodule law");
    with_file(ring);
    with_seed(ring);
    ring->add_option("-o,--output", output, "write the table as an algebra document");
    auto* nak = app.add_subcommand("nakayama", "Nakayama automorphism and inner-ness");
    with_file(nak);
    with_seed(nak);
    auto* co = app.add_subcommand("coextend", "trivial coextension C + C* with symmetric witness");
    with_file(co);
    with_seed(co);
    co->add_option("-o,--output", output, "write D as a coalgebra document");
    co->add_flag("--no-search", no_search, "skip the independent symmetric search on D");
    auto* br = app.add_subcommand("brauer", "F, G, H on a comodule");
    with_file(br);
    with_seed(br);
    br->add_option("--comodule", comodule, "comodule document (default: C itself)");
    auto* hp = app.add_subcommand("hopf", "integrals, unimodularity, S^2, symmetry verdicts");
    with_file(hp);
    with_seed(hp);
    auto* wd = app.add_subcommand("wedge", "iterated wedge of a subspace");
    with_file(wd);
    wd->add_option("--sub", sub, "subspace document")->required();
    wd->add_option("-n", steps, "number of wedge powers (default: until stable)");
    auto* cp = app.add_subcommand("corpus", "list or export built-in instances");
    cp->add_option("name", name, "instance to export");
    cp->add_option("-o,--output", output, "output file");

    std::vector<std::string> argv_store{"cofrob"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store)
        argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Report kv{out};
    SearchOptions opts = search_options(seed, grid);
    try {
        if (v->parsed())
            return cmd_validate(file, parent, kv);
        if (cp->parsed())
            return cmd_corpus(name, output, kv);
        if (hp->parsed())
            return cmd_hopf(exchange::parse_hopf(read_text(file)), opts, kv);
        Coalgebra c = exchange::parse_coalgebra(read_text(file));
        if (info->parsed())
            return cmd_info(c, seed, kv);
        if (cf->parsed())
            return cmd_cofrobenius(c, opts, kv);
        if (sym->parsed())
            return cmd_symmetric(c, opts, kv);
        if (ring->parsed())
            return cmd_ring(c, opts, output, kv);
        if (nak->parsed())
            return cmd_nakayama(c, opts, kv);
        if (co->parsed())
            return cmd_coextend(c, opts, output, !no_search, kv);
        if (br->parsed())
            return cmd_brauer(c, comodule, opts, kv);
        if (wd->parsed())
            return cmd_wedge(c, sub, steps, kv);
    }
    catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const TheoremViolation& e) {
        err << "internal assertion failed: " << e.what() << "\n";
        return 3;
    }
    catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace cofrob
