#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "ech/capacities.hpp"
#include "ech/ellipsoid.hpp"
#include "ech/oracle.hpp"
#include "ech/orbits.hpp"
#include "ech/serialize.hpp"

namespace ech::cli {

namespace {

enum class Format { Plain, Json, Csv };

constexpr const char* kNotCertificate =
    "no obstruction found; this is not a certificate: larger k may still obstruct";

Format parse_format(const std::string& name) {
    if (name == "plain") return Format::Plain;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw ParseError("unknown format '" + name + "' (plain, json, csv)");
}

struct Output {
    Format format = Format::Plain;
    bool decimal = false;
    std::ostream* out = nullptr;

    // Exact rational, optionally followed by a decimal approximation in plain mode.
    std::string num(const Rational& r) const {
        std::string s = r.str();
        if (decimal && format == Format::Plain && !r.is_integer()) {
            char buf[64];
            std::snprintf(buf, sizeof buf, " (%.12g)", r.to_double());
            s += buf;
        }
        return s;
    }

    void json(const Json& j) const { *out << j.dump(2) << '\n'; }
};

std::pair<Rational, Rational> parse_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw ParseError("expected A,B but got '" + text + "'");
    return {Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
}

// --- subcommand bodies ------------------------------------------------------

int emit_capacities(const Output& o, const CapacitySequence& seq) {
    switch (o.format) {
        case Format::Json: o.json(capacities_to_json(seq)); break;
        case Format::Csv: *o.out << capacities_to_csv(seq); break;
        case Format::Plain:
            for (std::int64_t k = 1; k <= seq.size(); ++k) *o.out << k << ' ' << o.num(seq.at(k)) << '\n';
            break;
    }
    return kOk;
}

int emit_count(const Output& o, const Rational& a, const Rational& b, const Rational& limit, const Integer& n) {
    switch (o.format) {
        case Format::Json:
            o.json({{"a", a.str()}, {"b", b.str()}, {"limit", limit.str()}, {"count", integer_to_json(n)}});
            break;
        case Format::Csv:
            *o.out << "a,b,limit,count\n" << a << ',' << b << ',' << limit << ',' << to_string(n) << '\n';
            break;
        case Format::Plain:
            *o.out << "#{(m,n) : " << o.num(a) << "*m + " << o.num(b) << "*n < " << o.num(limit)
                   << "} = " << to_string(n) << '\n';
            break;
    }
    return kOk;
}

int run_grading(const Output& o, const Ellipsoid& e, const EllipsoidGenerator& g) {
    const auto gr = grading(e, g);
    switch (o.format) {
        case Format::Json: {
            Json j;
            j["a"] = e.a().str();
            j["b"] = e.b().str();
            j["tilt"] = tilt_str(e.tilt());
            j["m1"] = g.m1;
            j["m2"] = g.m2;
            j["c1"] = integer_to_json(gr.c1);
            j["Q"] = integer_to_json(gr.q);
            j["cz"] = integer_to_json(gr.cz);
            j["total"] = integer_to_json(gr.total);
            o.json(j);
            break;
        }
        case Format::Csv:
            *o.out << "m1,m2,c1,Q,cz,total\n"
                   << g.m1 << ',' << g.m2 << ',' << to_string(gr.c1) << ',' << to_string(gr.q) << ','
                   << to_string(gr.cz) << ',' << to_string(gr.total) << '\n';
            break;
        case Format::Plain:
            *o.out << "c1 = " << to_string(gr.c1) << "\nQ = " << to_string(gr.q) << "\ncz = " << to_string(gr.cz)
                   << "\ntotal = " << to_string(gr.total) << '\n';
            break;
    }
    return kOk;
}

int run_homology(const Output& o, const Ellipsoid& e, std::int64_t max_grading) {
    if (max_grading < 0) throw PreconditionViolation("--max-grading must be >= 0");
    const auto table = homology_table(e, max_grading / 2);
    switch (o.format) {
        case Format::Json: o.json(homology_to_json(table)); break;
        case Format::Csv: *o.out << homology_to_csv(table); break;
        case Format::Plain:
            for (const auto& [grade, gens] : table.by_grading) {
                *o.out << "grading " << to_string(grade) << ": Z^" << gens.size();
                for (const auto& r : gens)
                    *o.out << "  [m1=" << r.generator.m1 << " m2=" << r.generator.m2
                           << " action=" << o.num(r.action) << ']';
                *o.out << '\n';
            }
            *o.out << "all other gradings up to " << max_grading << ": 0\n";
            break;
    }
    return kOk;
}

int run_generators(const Output& o, const Ellipsoid& e, std::int64_t k) {
    const auto gens = sorted_generators(e, k);
    switch (o.format) {
        case Format::Json: o.json(generators_to_json(gens)); break;
        case Format::Csv: *o.out << generators_to_csv(gens); break;
        case Format::Plain:
            for (std::size_t i = 0; i < gens.size(); ++i)
                *o.out << i + 1 << ": m1=" << gens[i].generator.m1 << " m2=" << gens[i].generator.m2
                       << " grading=" << to_string(gens[i].grading) << " action=" << o.num(gens[i].action)
                       << '\n';
            break;
    }
    return kOk;
}

int run_obstruct(const Output& o, const std::string& source, const std::string& target, std::int64_t k) {
    const auto [a, b] = parse_pair(source);
    const auto [c, d] = parse_pair(target);
    const auto verdict = check_embedding(a, b, c, d, k);
    const bool volume_ok = volume_consistent(a, b, c, d);
    const auto* hit = std::get_if<Obstructed>(&verdict);
    switch (o.format) {
        case Format::Json: {
            Json j;
            j["source"] = {a.str(), b.str()};
            j["target"] = {c.str(), d.str()};
            j["max_k"] = k;
            j["obstructed"] = hit != nullptr;
            if (hit) {
                j["k"] = hit->k;
                j["lhs"] = hit->lhs.str();
                j["rhs"] = hit->rhs.str();
            } else {
                j["note"] = kNotCertificate;
            }
            j["volume_consistent"] = volume_ok;
            o.json(j);
            break;
        }
        case Format::Csv:
            *o.out << "obstructed,k,lhs,rhs,max_k,volume_consistent\n";
            if (hit)
                *o.out << "1," << hit->k << ',' << hit->lhs << ',' << hit->rhs << ',' << k << ',' << volume_ok
                       << '\n';
            else
                *o.out << "0,,,," << k << ',' << volume_ok << '\n';
            break;
        case Format::Plain:
            if (hit)
                *o.out << "obstructed at k=" << hit->k << ": (" << a << ',' << b << ")_" << hit->k << " = "
                       << o.num(hit->lhs) << " > (" << c << ',' << d << ")_" << hit->k << " = " << o.num(hit->rhs)
                       << '\n';
            else
                *o.out << "no obstruction for k <= " << k << '\n' << kNotCertificate << '\n';
            *o.out << "volume " << (volume_ok ? "consistent" : "inconsistent") << ": a*b = " << o.num(a * b)
                   << (volume_ok ? " <= " : " > ") << "c*d = " << o.num(c * d) << '\n';
            break;
    }
    return hit ? kObstructed : kOk;
}

int run_fbound(const Output& o, const Rational& a, std::int64_t k) {
    const auto fb = f_lower_bound(a, k);
    switch (o.format) {
        case Format::Json:
            o.json({{"a", a.str()}, {"max_k", k}, {"bound", fb.bound.str()}, {"witness_k", fb.witness_k}});
            break;
        case Format::Csv:
            *o.out << "a,max_k,bound,witness_k\n" << a << ',' << k << ',' << fb.bound << ',' << fb.witness_k << '\n';
            break;
        case Format::Plain:
            *o.out << "f(" << o.num(a) << ") >= " << o.num(fb.bound) << "  (attained at k=" << fb.witness_k
                   << ", k <= " << k << ")\n";
            break;
    }
    return kOk;
}

int run_staircase(const Output& o, const Rational& from, const Rational& to, std::int64_t samples, std::int64_t k) {
    const auto points = staircase_data(from, to, samples, k);
    switch (o.format) {
        case Format::Json: {
            Json j = Json::array();
            for (const auto& p : points)
                j.push_back({{"a", p.a.str()}, {"bound", p.bound.bound.str()}, {"witness_k", p.bound.witness_k}});
            o.json(j);
            break;
        }
        case Format::Csv:
            *o.out << "a,bound,witness_k\n";
            for (const auto& p : points) *o.out << p.a << ',' << p.bound.bound << ',' << p.bound.witness_k << '\n';
            break;
        case Format::Plain:
            for (const auto& p : points)
                *o.out << o.num(p.a) << "  " << o.num(p.bound.bound) << "  (k=" << p.bound.witness_k << ")\n";
            break;
    }
    return kOk;
}

int emit_partition(const Output& o, const std::string& kind, std::int64_t m, const Partition& in,
                   const Partition& out) {
    auto parts_json = [](const Partition& p) { return Json(p.parts); };
    switch (o.format) {
        case Format::Json:
            o.json({{"orbit", kind}, {"m", m}, {"incoming", parts_json(in)}, {"outgoing", parts_json(out)}});
            break;
        case Format::Csv: {
            auto joined = [](const Partition& p) {
                std::string s;
                for (std::size_t i = 0; i < p.parts.size(); ++i) s += (i ? " " : "") + std::to_string(p.parts[i]);
                return s;
            };
            *o.out << "orbit,m,incoming,outgoing\n" << kind << ',' << m << ',' << joined(in) << ',' << joined(out)
                   << '\n';
            break;
        }
        case Format::Plain:
            *o.out << "P_in(" << m << ") = " << in.str() << "\nP_out(" << m << ") = " << out.str() << '\n';
            break;
    }
    return kOk;
}

int run_oracle_grading(const Output& o, const Ellipsoid& e, const EllipsoidGenerator& g) {
    const auto total = oracle::grading_double_loop(e, g);
    switch (o.format) {
        case Format::Json: o.json({{"m1", g.m1}, {"m2", g.m2}, {"total", integer_to_json(total)}}); break;
        case Format::Csv: *o.out << "m1,m2,total\n" << g.m1 << ',' << g.m2 << ',' << to_string(total) << '\n'; break;
        case Format::Plain: *o.out << "total = " << to_string(total) << '\n'; break;
    }
    return kOk;
}

// --- option plumbing --------------------------------------------------------

struct Args {
    std::string format;
    bool decimal = false;
    std::string a, b, tilt, limit, from, to, source, target, hyperbolic, rotation, direction = "out";
    std::int64_t k = 0, m1 = 0, m2 = 0, max_grading = 0, samples = 0, mult = 0;
};

void add_format(CLI::App* cmd, Args& args, const char* fallback) {
    cmd->add_option("--format", args.format, std::string("plain|json|csv (default ") + fallback + ")")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    cmd->add_flag("--decimal", args.decimal, "plain format: append decimal approximations");
}

void add_axes(CLI::App* cmd, Args& args) {
    cmd->add_option("--a", args.a, "first axis, p or p/q")->required();
    cmd->add_option("--b", args.b, "second axis, p or p/q")->required();
}

void add_tilt(CLI::App* cmd, Args& args) {
    cmd->add_option("--tilt", args.tilt, "perturbation of a/b: + or -")->required();
}

Ellipsoid make_ellipsoid(const Args& args) {
    return Ellipsoid(Rational::parse(args.a), Rational::parse(args.b), parse_tilt(args.tilt));
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact ECH data of ellipsoid boundaries and ECH capacity obstructions", "ech"};
    app.require_subcommand(1);
    Args args;
    std::function<int(const Output&)> action;

    auto* cap = app.add_subcommand("capacities", "capacity sequence (a,b)_1..k");
    add_axes(cap, args);
    cap->add_option("--k", args.k, "length")->required();
    add_format(cap, args, "plain");
    cap->callback([&] {
        action = [&](const Output& o) {
            return emit_capacities(o, capacity_sequence(Rational::parse(args.a), Rational::parse(args.b), args.k));
        };
    });

    auto* gr = app.add_subcommand("grading", "ECH index c1 + Q + CZ of gamma1^m1 gamma2^m2");
    add_axes(gr, args);
    add_tilt(gr, args);
    gr->add_option("--m1", args.m1, "multiplicity of gamma1")->required();
    gr->add_option("--m2", args.m2, "multiplicity of gamma2")->required();
    add_format(gr, args, "plain");
    gr->callback([&] {
        action = [&](const Output& o) { return run_grading(o, make_ellipsoid(args), {args.m1, args.m2}); };
    });

    auto* hom = app.add_subcommand("homology", "generators per grading up to a maximum grading");
    add_axes(hom, args);
    add_tilt(hom, args);
    hom->add_option("--max-grading", args.max_grading, "largest grading listed (2N)")->required();
    add_format(hom, args, "plain");
    hom->callback([&] {
        action = [&](const Output& o) { return run_homology(o, make_ellipsoid(args), args.max_grading); };
    });

    auto* gens = app.add_subcommand("generators", "first k generators in action order");
    add_axes(gens, args);
    add_tilt(gens, args);
    gens->add_option("--k", args.k, "number of generators")->required();
    add_format(gens, args, "plain");
    gens->callback([&] {
        action = [&](const Output& o) { return run_generators(o, make_ellipsoid(args), args.k); };
    });

    auto* obs = app.add_subcommand("obstruct",
                                   "compare (a,b)_k with (c,d)_k for k <= K; exit 2 when obstructed");
    obs->add_option("--source", args.source, "A,B")->required();
    obs->add_option("--target", args.target, "C,D")->required();
    obs->add_option("--k", args.k, "largest k checked")->required();
    add_format(obs, args, "plain");
    obs->callback([&] {
        action = [&](const Output& o) { return run_obstruct(o, args.source, args.target, args.k); };
    });

    auto* cnt = app.add_subcommand("count", "#{(m,n) : a*m + b*n < L}");
    add_axes(cnt, args);
    cnt->add_option("--limit", args.limit, "L, p or p/q")->required();
    add_format(cnt, args, "plain");
    cnt->callback([&] {
        action = [&](const Output& o) {
            const auto a = Rational::parse(args.a), b = Rational::parse(args.b), l = Rational::parse(args.limit);
            return emit_count(o, a, b, l, filtered_count(a, b, l));
        };
    });

    auto* fb = app.add_subcommand("fbound", "lower bound max_k (a,1)_k/(1,1)_k for f(a)");
    fb->add_option("--a", args.a, "a >= 1")->required();
    fb->add_option("--k", args.k, "largest k (default 1000)");
    add_format(fb, args, "plain");
    fb->callback([&] {
        action = [&](const Output& o) { return run_fbound(o, Rational::parse(args.a), args.k ? args.k : 1000); };
    });

    auto* st = app.add_subcommand("staircase", "fbound at evenly spaced a");
    st->add_option("--from", args.from, "smallest a >= 1")->required();
    st->add_option("--to", args.to, "largest a")->required();
    st->add_option("--samples", args.samples, "number of points >= 2")->required();
    st->add_option("--k", args.k, "largest k")->required();
    add_format(st, args, "csv");
    st->callback([&] {
        action = [&](const Output& o) {
            return run_staircase(o, Rational::parse(args.from), Rational::parse(args.to), args.samples, args.k);
        };
    });

    auto* part = app.add_subcommand("partition", "incoming/outgoing partitions of an orbit multiplicity");
    auto* hyp = part->add_option("--hyperbolic", args.hyperbolic, "hyperbolic orbit with eigenvalue sign + or -");
    auto* rot = part->add_option("--rotation", args.rotation, "elliptic orbit rotation p/q (m <= 2 only)");
    part->add_option("--tilt", args.tilt, "tilt of the elliptic rotation: + or -");
    part->add_option("--mult", args.mult, "multiplicity m")->required();
    hyp->excludes(rot);
    add_format(part, args, "plain");
    part->callback([&] {
        action = [&](const Output& o) {
            if (!args.hyperbolic.empty()) {
                const Tilt t = parse_tilt(args.hyperbolic);
                if (t == Tilt::None) throw ParseError("--hyperbolic takes + or -");
                const auto sign = t == Tilt::Plus ? EigenvalueSign::Positive : EigenvalueSign::Negative;
                const auto p = hyperbolic_partition(sign, args.mult);
                return emit_partition(o, std::string("hyperbolic") + tilt_str(t), args.mult, p, p);
            }
            if (args.rotation.empty()) throw ParseError("partition needs --hyperbolic or --rotation");
            const PerturbedRational theta{Rational::parse(args.rotation),
                                          args.tilt.empty() ? Tilt::Plus : parse_tilt(args.tilt)};
            return emit_partition(o, "elliptic", args.mult,
                                  elliptic_partition_small(PartitionDirection::Incoming, args.mult, theta),
                                  elliptic_partition_small(PartitionDirection::Outgoing, args.mult, theta));
        };
    });

    auto* orc = app.add_subcommand("oracle", "brute-force references for capacities, count, grading");
    orc->require_subcommand(1);
    auto* orc_cap = orc->add_subcommand("capacities", "sort-all capacity sequence");
    add_axes(orc_cap, args);
    orc_cap->add_option("--k", args.k, "length")->required();
    add_format(orc_cap, args, "plain");
    orc_cap->callback([&] {
        action = [&](const Output& o) {
            const auto a = Rational::parse(args.a), b = Rational::parse(args.b);
            if (a.sign() <= 0 || b.sign() <= 0 || args.k < 1)
                throw PreconditionViolation("oracle capacities needs a, b > 0 and k >= 1");
            return emit_capacities(o, CapacitySequence{a, b, oracle::capacities_sort_all(a, b, args.k)});
        };
    });
    auto* orc_cnt = orc->add_subcommand("count", "double-loop lattice count");
    add_axes(orc_cnt, args);
    orc_cnt->add_option("--limit", args.limit, "L")->required();
    add_format(orc_cnt, args, "plain");
    orc_cnt->callback([&] {
        action = [&](const Output& o) {
            const auto a = Rational::parse(args.a), b = Rational::parse(args.b), l = Rational::parse(args.limit);
            if (a.sign() <= 0 || b.sign() <= 0) throw PreconditionViolation("oracle count needs a, b > 0");
            return emit_count(o, a, b, l, oracle::count_double_loop(a, b, l));
        };
    });
    auto* orc_gr = orc->add_subcommand("grading", "double-loop lattice grading");
    add_axes(orc_gr, args);
    add_tilt(orc_gr, args);
    orc_gr->add_option("--m1", args.m1, "multiplicity of gamma1")->required();
    orc_gr->add_option("--m2", args.m2, "multiplicity of gamma2")->required();
    add_format(orc_gr, args, "plain");
    orc_gr->callback([&] {
        action = [&](const Output& o) {
            if (args.m1 < 0 || args.m2 < 0) throw PreconditionViolation("multiplicities must be nonnegative");
            return run_oracle_grading(o, make_ellipsoid(args), {args.m1, args.m2});
        };
    });

    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kFailure;
    }

    try {
        const bool staircase = st->parsed();
        Output o;
        o.format = parse_format(args.format.empty() ? (staircase ? "csv" : "plain") : args.format);
        o.decimal = args.decimal;
        o.out = &out;
        return action(o);
    } catch (const DegenerateRatio& e) {
        err << "error: degenerate ratio at k=" << e.k() << ": " << e.what() << '\n';
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
    }
    return kFailure;
}

}  // namespace ech::cli
