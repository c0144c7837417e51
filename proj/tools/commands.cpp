#include "commands.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace cli {

#ifndef TORKIT_VERSION
#define TORKIT_VERSION "0.0.0"
#endif

const char* version() { return TORKIT_VERSION; }

json Config::to_json() const {
    return {{"seed", seed}, {"cap_stage", cap_stage}, {"cap_degree", cap_degree}, {"truncation", truncation}};
}

void Config::merge(const json& j) {
    check_keys(j, {"seed", "cap_stage", "cap_degree", "truncation"}, "config");
    if (j.contains("seed")) seed = to_long(j.at("seed"), "config.seed", 0, 1l << 62);
    if (j.contains("cap_stage")) cap_stage = to_long(j.at("cap_stage"), "config.cap_stage", 1, 64);
    if (j.contains("cap_degree")) cap_degree = to_long(j.at("cap_degree"), "config.cap_degree", 1, 64);
    if (j.contains("truncation")) truncation = to_long(j.at("truncation"), "config.truncation", 1, 1000);
}

namespace {

// A handler fills the result and the checked clauses; a failing clause
// means verified-false.
using Handler = std::function<json(const json& in, const Config& cfg, Report& rep)>;

PolarizedMonoid to_polarized(const json& in) {
    PolarizedMonoid p;
    p.n = to_monoid(field(in, "n", "input"), "n");
    size_t r = p.n.ambient();
    p.t = to_ivec(field(in, "t", "input"), "t", r);
    p.gamma = to_qmat(field(in, "gamma", "input"), "gamma", r);
    if (p.gamma.empty()) throw InputError("gamma is empty");
    return p;
}

json out_polarized(const PolarizedMonoid& p) {
    return {{"t", out(p.t)}, {"gamma", out(p.gamma)}, {"n", out_monoid(p.n)}, {"scale", out(p.scale)}};
}

Cone to_cone(const json& j, size_t r, const std::string& what) {
    IMat rays = to_imat(j, what, r);
    if (rays.empty()) throw InputError(what + " is empty");
    return Cone::from_generators(r, rays);
}

MonomialRing to_ring(const json& j) {
    check_keys(j, {"variant", "t", "gamma", "n", "c1", "c2"}, "ring");
    const json& v = field(j, "variant", "ring");
    std::string variant = v.is_string() ? v.get<std::string>() : "";
    if (variant == "lambda" || variant == "lambda-prime") {
        if (j.contains("c1") || j.contains("c2")) throw InputError("c1 and c2 belong to lambda-tc rings");
        return lambda_ring(to_polarized(j), variant == "lambda-prime");
    }
    if (variant == "lambda-tc") {
        if (j.contains("gamma") || j.contains("n")) throw InputError("gamma and n belong to lambda rings");
        IVec t = to_ivec(field(j, "t", "ring"), "ring.t");
        size_t r = t.size();
        return lambda_tc_ring(t, to_cone(field(j, "c1", "ring"), r, "ring.c1"),
                              to_cone(field(j, "c2", "ring"), r, "ring.c2"));
    }
    throw InputError("ring.variant must be lambda, lambda-prime or lambda-tc");
}

std::vector<QVec> points_of(const json& in, size_t r) {
    if (!in.contains("points")) return {};
    return to_qmat(in.at("points"), "points", r);
}

size_t witt_m(const json& in, const Config& cfg) {
    return in.contains("m") ? to_long(in.at("m"), "m", 1, 1000) : cfg.truncation;
}

json cmd_hilbert(const json& in, const Config&, Report&) {
    check_keys(in, {"monoid"}, "input");
    AffineMonoid m = to_monoid(field(in, "monoid", "input"), "monoid");
    const IMat& hb = m.normal_hilbert_basis();
    return {{"hilbert_basis", out(hb)}, {"size", hb.size()}, {"rank", m.rank()}};
}

json cmd_normalize(const json& in, const Config&, Report&) {
    check_keys(in, {"monoid"}, "input");
    AffineMonoid m = to_monoid(field(in, "monoid", "input"), "monoid");
    return {{"normalization", out_monoid(normalization(m))}, {"input_is_normal", m.is_normal()}};
}

json cmd_seminormalize(const json& in, const Config&, Report&) {
    check_keys(in, {"monoid", "points"}, "input");
    AffineMonoid m = to_monoid(field(in, "monoid", "input"), "monoid");
    Seminormalization s = seminormalization(m);
    json steps = json::array();
    for (auto& st : s.steps) steps.push_back(out(st));
    json res = {{"seminormalization", out_monoid(s.result)},
                {"iterations", s.steps.size()},
                {"adjoined", steps},
                {"input_is_seminormal", is_seminormal(m)},
                {"result_is_normal", s.result.is_normal()}};
    if (in.contains("points")) {
        size_t r = m.ambient();
        json mem = json::array();
        for (auto& x : to_imat(in.at("points"), "points", r))
            mem.push_back({{"point", out(x)}, {"in_seminormalization", in_seminormalization(m, x)}});
        res["membership"] = mem;
    }
    return res;
}

json cmd_interior(const json& in, const Config& cfg, Report&) {
    check_keys(in, {"monoid", "max_degree", "points"}, "input");
    AffineMonoid m = to_monoid(field(in, "monoid", "input"), "monoid");
    long deg = in.contains("max_degree") ? to_long(in.at("max_degree"), "max_degree", 1, 64) : cfg.cap_degree;
    InteriorMonoid mi(m);
    json res = {{"max_degree", deg},
                {"irreducibles", out(mi.irreducibles(Int(deg)))},
                {"least_interior_element", out(mi.least_interior_element())}};
    if (in.contains("points")) {
        size_t r = m.ambient();
        json mem = json::array();
        for (auto& x : to_imat(in.at("points"), "points", r))
            mem.push_back({{"point", out(x)}, {"in_monoid", mi.contains(x)}, {"in_ideal", mi.in_ideal(x)}});
        res["membership"] = mem;
    }
    return res;
}

json cmd_region(const json& in, const Config&, Report&) {
    check_keys(in, {"monoid", "w", "free"}, "input");
    AffineMonoid m = to_monoid(field(in, "monoid", "input"), "monoid");
    size_t r = m.ambient();
    QMat w = to_qmat(field(in, "w", "input"), "w", r);
    json res = {{"region", out_monoid(region_submonoid(m, w))}};
    const json* free = in.contains("free") ? &in.at("free") : nullptr;
    if (free && !free->is_boolean()) throw InputError("free must be true or false");
    if (free && free->get<bool>()) {
        FreeBasis fb = free_basis_in_region(m, w);
        res["free_basis"] = {{"basis", out(fb.basis)}, {"c", out(fb.c)}, {"simplex", out(fb.simplex)}};
    }
    return res;
}

json cmd_invert_extremal(const json& in, const Config&, Report& rep) {
    check_keys(in, {"monoid", "t"}, "input");
    AffineMonoid m = to_monoid(field(in, "monoid", "input"), "monoid");
    IVec t = to_ivec(field(in, "t", "input"), "t", m.ambient());
    ExtremalInversion inv = invert_extremal(m, t);
    rep.add("quotient rank is rank M - 1", inv.n.rank() + 1 == m.rank(),
            "rank " + std::to_string(inv.n.rank()) + " for rank M = " + std::to_string(m.rank()));
    rep.add("quotient has trivial units", inv.n.has_trivial_units(), "the quotient monoid has units");
    return {{"t", out(inv.t)}, {"quotient", out_monoid(inv.n)}, {"projection", out(inv.projection)}};
}

json cmd_stage(const json& in, const Config&, Report&) {
    check_keys(in, {"monoid", "c", "j", "points"}, "input");
    AffineMonoid m = to_monoid(field(in, "monoid", "input"), "monoid");
    CSeq c = in.contains("c") ? to_cseq(in.at("c"), "c") : CSeq();
    size_t j = to_long(field(in, "j", "input"), "j", 0, 64);
    DilationStage st(m, c, j);
    json res = {{"j", j}, {"denominator", out(st.denominator())}, {"generators", out(st.generators())}};
    if (in.contains("points")) {
        json mem = json::array();
        for (auto& x : points_of(in, m.ambient()))
            mem.push_back({{"point", out(x)},
                           {"contains", st.contains(x)},
                           {"interior", st.in_interior(x)},
                           {"in_group", st.in_group(x)}});
        res["membership"] = mem;
    }
    return res;
}

json cmd_excision(const json& in, const Config& cfg, Report& rep) {
    check_keys(in, {"monoid", "c", "j", "a"}, "input");
    AffineMonoid m = to_monoid(field(in, "monoid", "input"), "monoid");
    CSeq c = in.contains("c") ? to_cseq(in.at("c"), "c") : CSeq();
    size_t j = to_long(field(in, "j", "input"), "j", 0, 64);
    size_t r = m.ambient();
    QMat a = to_qmat(field(in, "a", "input"), "a", r);
    if (a.empty()) throw InputError("a is empty");
    ExcisionWitness w = excision_witness(m, c, a, j, cfg.cap_stage);
    DilationStage st(m, c, w.stage);
    bool sums = true, parts = st.in_interior(w.u) && st.in_interior(w.v);
    for (size_t i = 0; i < a.size(); ++i) {
        sums = sums && add(w.b[i], add(w.u, w.v)) == a[i];
        parts = parts && st.in_interior(w.b[i]);
    }
    rep.add("each a_i equals b_i + u + v", sums, "a decomposition does not add up");
    rep.add("all parts interior at stage " + std::to_string(w.stage), parts, "a part is not interior");
    return {{"b", out(w.b)}, {"u", out(w.u)}, {"v", out(w.v)}, {"stage", w.stage}, {"m", out(w.m)}};
}

json cmd_check_pyramidal(const json& in, const Config&, Report& rep) {
    check_keys(in, {"m", "n"}, "input");
    AffineMonoid m = to_monoid(field(in, "m", "input"), "m"), n = to_monoid(field(in, "n", "input"), "n");
    PyramidalCheck pc = is_pyramidal_extension(m, n);
    rep = pc.report;
    json res = {{"pyramidal", pc.report.ok()}, {"extension", nullptr}};
    if (pc.extension)
        res["extension"] = {{"apex", out(pc.extension->apex)},
                            {"delta", out(pc.extension->delta)},
                            {"base_normal", out(pc.extension->base_normal)}};
    return res;
}

json cmd_check_polarized(const json& in, const Config&, Report& rep) {
    check_keys(in, {"t", "gamma", "n"}, "input");
    PolarizedMonoid p = to_polarized(in);
    rep = verify_polarized(p);
    json res = {{"polarized", rep.ok()}, {"failure", rep.failure()}};
    if (rep.ok()) {
        json signs = json::array();
        IMat normals = gamma_facets(p.gamma, p.n.ambient());
        for (size_t i = 0; i < normals.size(); ++i)
            signs.push_back({{"normal", out(normals[i])}, {"sign", to_string(facet_sign(p, i))}});
        res["facet_signs"] = signs;
    }
    return res;
}

json cmd_antipode(const json& in, const Config&, Report& rep) {
    check_keys(in, {"t", "gamma", "n"}, "input");
    PolarizedMonoid p = to_polarized(in);
    Report before = verify_polarized(p);
    rep.add("input polarized", before.ok(), before.failure());
    PolarizedMonoid a = antipode(p), back = antipode(a);
    Report after = verify_polarized(a);
    rep.add("antipode polarized", after.ok(), after.failure());
    rep.add("antipode is an involution", back.t == p.t && back.gamma == p.gamma && back.n == p.n,
            "applying the antipode twice changes the triple");
    return {{"antipode", out_polarized(a)}};
}

json cmd_approx_b(const json& in, const Config& cfg, Report& rep) {
    check_keys(in, {"m", "n", "c", "s", "j", "w", "wprime"}, "input");
    AffineMonoid m = to_monoid(field(in, "m", "input"), "m"), n = to_monoid(field(in, "n", "input"), "n");
    size_t r = n.ambient();
    PyramidalCheck pc = is_pyramidal_extension(m, n);
    if (!pc.extension) throw Error("M inside N is not a pyramidal extension: " + pc.report.failure());
    CSeq c = in.contains("c") ? to_cseq(in.at("c"), "c") : CSeq();
    size_t s = to_long(field(in, "s", "input"), "s", 1, 8);
    size_t j = to_long(field(in, "j", "input"), "j", 0, 64);
    QMat w = to_qmat(field(in, "w", "input"), "w", r), wp = to_qmat(field(in, "wprime", "input"), "wprime", r);
    ApproxCaps caps;
    caps.stage = cfg.cap_stage;
    ApproxB b = approxB_construct(*pc.extension, c, s, j, w, wp, caps);
    rep = b.report;
    json triples = json::array();
    for (auto& p : b.triples) triples.push_back(out_polarized(p));
    return {{"stage", b.stage}, {"triples", triples}};
}

json cmd_bipyramid_approx(const json& in, const Config& cfg, Report& rep) {
    check_keys(in, {"n", "cprime", "cdprime", "t", "gamma", "l_points", "c"}, "input");
    AffineMonoid n = to_monoid(field(in, "n", "input"), "n");
    size_t r = n.ambient();
    Cone cp = to_cone(field(in, "cprime", "input"), r, "cprime");
    Cone cdp = to_cone(field(in, "cdprime", "input"), r, "cdprime");
    QVec t = to_qvec(field(in, "t", "input"), "t", r);
    QMat gamma = to_qmat(field(in, "gamma", "input"), "gamma", r);
    QMat lpts = to_qmat(field(in, "l_points", "input"), "l_points", r);
    CSeq c = in.contains("c") ? to_cseq(in.at("c"), "c") : CSeq();
    BipyramidalApprox b = bipyramidal_approx(n, cp, cdp, t, gamma, lpts, c, cfg.cap_stage);
    rep = b.report;
    return {{"c1", out(b.c1)}, {"c2", out(b.c2)}, {"shared", out(b.shared)}, {"omega", out(b.omega)},
            {"stage", b.stage}};
}

json cmd_birkhoff(const json& in, const Config&, Report& rep) {
    check_keys(in, {"theta"}, "input");
    LaurentMatrix theta = to_laurent(field(in, "theta", "input"), "theta");
    Birkhoff b = birkhoff_factorize(theta);
    Exp total = 0;
    for (Exp e : b.u) total += e;
    Exp deg = theta.det().degree();
    rep.add("sigma over Q[t^-1]", b.sigma.in_tinv(), "sigma has positive powers of t");
    rep.add("tau over Q[t]", b.tau.in_t(), "tau has negative powers of t");
    rep.add("sigma theta tau is diag(t^u)", b.sigma * theta * b.tau == LaurentMatrix::diag_t(b.u),
            "the product is not the diagonal of t-powers");
    rep.add("sum of u is deg det", total == deg,
            "sum " + std::to_string(total) + " against deg det " + std::to_string(deg));
    return {{"u", b.u}, {"deg_det", deg}, {"sigma", out(b.sigma)}, {"tau", out(b.tau)}};
}

json cmd_interval(const json& in, const Config&, Report&) {
    check_keys(in, {"theta"}, "input");
    auto [a, b] = polarization_interval(to_laurent(field(in, "theta", "input"), "theta"));
    return {{"interval", {a, b}}};
}

json cmd_lambda_check(const json& in, const Config&, Report& rep) {
    check_keys(in, {"ring", "phi"}, "input");
    MonomialRing ring = to_ring(field(in, "ring", "input"));
    MonoMatrix phi = to_mono_matrix(field(in, "phi", "input"), ring.r, "phi");
    bool member = lambda_membership(phi, ring);
    rep.add(std::string("matrix lies in ") + to_string(ring.variant), member, "some entry leaves its support");
    return {{"variant", to_string(ring.variant)}, {"member", member}};
}

json cmd_tilde_c(const json& in, const Config&, Report& rep) {
    check_keys(in, {"ring", "phi", "c", "cprime"}, "input");
    MonomialRing ring = to_ring(field(in, "ring", "input"));
    MonoMatrix phi = to_mono_matrix(field(in, "phi", "input"), ring.r, "phi");
    Int c = to_int(field(in, "c", "input"), "c");
    MonoMatrix img = tilde_c_apply(phi, c, ring);
    rep.add("image lies in the ring", lambda_membership(img, ring), "the image left the ring");
    json res = {{"image", out(img)}, {"omega", ring.omega ? out(*ring.omega) : json(nullptr)}};
    if (in.contains("cprime")) {
        EndoExponent e = minimal_endo_exponent(ring, to_cone(in.at("cprime"), ring.r, "cprime"));
        res["minimal_endo_exponent"] = {{"c0", out(e.c0)}, {"precondition", e.precondition}};
    }
    return res;
}

Handler witt_op(const std::string& op) {
    return [op](const json& in, const Config& cfg, Report& rep) -> json {
        size_t m = witt_m(in, cfg);
        auto f = [&] { return to_witt(field(in, "f", "input"), m, "f"); };
        auto g = [&] { return to_witt(field(in, "g", "input"), m, "g"); };
        if (op == "add") {
            check_keys(in, {"f", "g", "m"}, "input");
            return {{"value", out(witt_add(f(), g()))}};
        }
        if (op == "star") {
            check_keys(in, {"f", "g", "m"}, "input");
            WittVector a = f(), b = g(), s = witt_star(a, b);
            if (m <= 64)
                rep.add("ghost product matches the factor expansion", s == witt_star_expansion(a, b),
                        "the two star products differ");
            return {{"value", out(s)}};
        }
        if (op == "ghost") {
            check_keys(in, {"f", "m"}, "input");
            return {{"ghost", out(ghost(f()))}};
        }
        if (op == "from-ghost") {
            check_keys(in, {"v", "m"}, "input");
            QVec v = to_qvec(field(in, "v", "input"), "v", in.contains("m") ? m : 0);
            return {{"value", out(from_ghost(v))}};
        }
        if (op == "expand") {
            check_keys(in, {"f", "m"}, "input");
            return {{"factors", out(factor_expansion(f()))}};
        }
        check_keys(in, {"f", "m"}, "input");
        WittVector x = f();
        return {{"degree", filtration_degree(x)}, {"is_one", x.is_one()}};
    };
}

json cmd_classify(const json& in, const Config&, Report& rep) {
    check_keys(in, {"vertices"}, "input");
    size_t n = 0;
    QMat pts = to_qmat(field(in, "vertices", "input"), "vertices", n);
    if (pts.empty()) throw InputError("vertices is empty");
    Polytope p = Polytope::hull(n, pts);
    SigmaResult s = classify_sigma(p);
    rep.add("pyramid or bipyramid at every level", s.sigma.has_value(), s.reason);
    json trace = json::array();
    for (auto& st : s.trace)
        trace.push_back({{"dim", st.dim}, {"kind", st.bipyramid ? "bipyramid" : "pyramid"}, {"fired", out(st.fired)}});
    return {{"dim", p.dim()},
            {"sigma", s.sigma ? json(*s.sigma) : json(nullptr)},
            {"trace", trace},
            {"reason", s.reason}};
}

json cmd_enumerate(const json& in, const Config&, Report& rep) {
    check_keys(in, {"r"}, "input");
    size_t r = to_long(field(in, "r", "input"), "r", 1, 6);
    json types = json::array();
    bool round_trip = true;
    for (auto& t : enumerate_types(r)) {
        round_trip = round_trip && classify_sigma(t.polytope).sigma == t.sigma;
        types.push_back({{"sigma", t.sigma}, {"vertices", out(t.polytope.vertices())}});
    }
    rep.add("every witness classifies to its type", round_trip, "a witness classifies differently");
    return {{"r", r}, {"count", types.size()}, {"types", types}};
}

json cmd_corner(const json& in, const Config&, Report&) {
    check_keys(in, {"monoid", "v"}, "input");
    AffineMonoid m = to_monoid(field(in, "monoid", "input"), "monoid");
    Corner c = corner_cone(m, to_ivec(field(in, "v", "input"), "v", m.ambient()));
    SigmaResult s = classify_sigma(c.figure);
    return {{"vertex", out(c.vertex)},
            {"lambda", out(c.lambda)},
            {"corner", out_monoid(c.monoid)},
            {"figure_vertices", out(c.figure.vertices())},
            {"sigma", s.sigma ? json(*s.sigma) : json(nullptr)}};
}

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> h = {
        {"hilbert", cmd_hilbert},
        {"normalize", cmd_normalize},
        {"seminormalize", cmd_seminormalize},
        {"interior", cmd_interior},
        {"region", cmd_region},
        {"invert-extremal", cmd_invert_extremal},
        {"stage", cmd_stage},
        {"excision-witness", cmd_excision},
        {"check-pyramidal", cmd_check_pyramidal},
        {"check-polarized", cmd_check_polarized},
        {"antipode", cmd_antipode},
        {"approx-b", cmd_approx_b},
        {"bipyramid-approx", cmd_bipyramid_approx},
        {"birkhoff", cmd_birkhoff},
        {"interval", cmd_interval},
        {"lambda-check", cmd_lambda_check},
        {"tilde-c", cmd_tilde_c},
        {"witt add", witt_op("add")},
        {"witt star", witt_op("star")},
        {"witt ghost", witt_op("ghost")},
        {"witt from-ghost", witt_op("from-ghost")},
        {"witt expand", witt_op("expand")},
        {"witt degree", witt_op("degree")},
        {"classify-p", cmd_classify},
        {"enumerate-types", cmd_enumerate},
        {"corner", cmd_corner},
    };
    return h;
}

json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open '" + path + "'");
    try {
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (auto& [k, h] : handlers()) v.push_back(k);
        return v;
    }();
    return names;
}

namespace {

json base_report(const Job& job) {
    return {{"schema", kSchema},
            {"version", version()},
            {"command", job.command},
            {"config", job.config.to_json()},
            {"input", job.input},
            {"result", nullptr},
            {"clauses", json::array()}};
}

}  // namespace

Outcome failure(const Job& job, const std::string& kind, const std::string& message) {
    Outcome o{2, base_report(job)};
    o.report["status"] = "error";
    o.report["error"] = {{"kind", kind}, {"message", message}};
    o.report["exit_code"] = 2;
    return o;
}

Outcome run(const Job& job) {
    Outcome o;
    json& rep = o.report;
    rep = base_report(job);
    auto fail = [&](const char* kind, const std::string& msg) { o = failure(job, kind, msg); };
    auto it = handlers().find(job.command);
    try {
        if (it == handlers().end()) throw InputError("unknown command '" + job.command + "'");
        Report checks;
        rep["result"] = it->second(job.input, job.config, checks);
        rep["clauses"] = out(checks);
        o.exit_code = checks.ok() ? 0 : 1;
        rep["status"] = checks.ok() ? "pass" : "fail";
    } catch (const InputError& e) {
        fail("input", e.what());
    } catch (const Error& e) {
        fail("precondition", e.what());
    } catch (const json::exception& e) {
        fail("input", e.what());
    } catch (const std::exception& e) {
        fail("internal", e.what());
    }
    o.report["exit_code"] = o.exit_code;
    return o;
}

Job parse_job(const json& j, const Config& defaults, const std::string& base_dir) {
    check_keys(j, {"command", "input", "config"}, "job");
    const json& cmd = field(j, "command", "job");
    if (!cmd.is_string()) throw InputError("job.command must be a string");
    Job job;
    job.command = cmd.get<std::string>();
    job.config = defaults;
    if (j.contains("config")) job.config.merge(j.at("config"));
    if (j.contains("input")) {
        const json& in = j.at("input");
        if (in.is_string()) {
            std::string path = in.get<std::string>();
            if (!path.empty() && path[0] != '/' && !base_dir.empty()) path = base_dir + "/" + path;
            job.input = read_json_file(path);
        } else if (in.is_object()) {
            job.input = in;
        } else {
            throw InputError("job.input must be an object or a file path");
        }
    }
    return job;
}

std::string render_table(const json& report) {
    std::ostringstream s;
    s << "command   " << report.at("command").get<std::string>() << "\n";
    s << "version   " << report.at("version").get<std::string>() << "\n";
    s << "config    " << report.at("config").dump() << "\n";
    s << "status    " << report.at("status").get<std::string>() << " (exit " << report.at("exit_code") << ")\n";
    if (report.contains("error"))
        s << "error     " << report["error"]["kind"].get<std::string>() << ": "
          << report["error"]["message"].get<std::string>() << "\n";
    const json& res = report.at("result");
    if (res.is_object()) {
        size_t w = 0;
        for (auto& [k, v] : res.items()) w = std::max(w, k.size());
        s << "result\n";
        for (auto& [k, v] : res.items()) {
            std::string text = v.is_string() ? v.get<std::string>() : v.dump();
            if (v.is_object() && v.contains("text")) text = v["text"].get<std::string>();
            s << "  " << k << std::string(w - k.size() + 2, ' ') << text << "\n";
        }
    }
    if (!report.at("clauses").empty()) {
        s << "clauses\n";
        for (auto& c : report.at("clauses")) {
            s << "  " << c.at("name").get<std::string>() << ": " << (c.at("pass").get<bool>() ? "PASS" : "FAIL");
            std::string d = c.at("detail").get<std::string>();
            if (!d.empty()) s << " (" << d << ")";
            s << "\n";
        }
    }
    return s.str();
}

}  // namespace cli
