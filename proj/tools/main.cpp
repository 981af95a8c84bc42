// apdecomp: search, construct, lift and classify arithmetic-progression
// decompositions of U_n and of small finite-field multiplicative groups.
//
// Exit codes: 0 success (including empty results), 1 usage error, 2 family /
// precondition error, 3 internal invariant violation.

#include "apdecomp/gf.hpp"
#include "apdecomp/golden.hpp"
#include "apdecomp/lifting.hpp"
#include "apdecomp/theorems.hpp"
#include "apdecomp/version.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <iostream>
#include <sstream>
#include <thread>

using namespace apd;
using nlohmann::json;

namespace {

struct Options {
    int threads = 0; // 0 = hardware concurrency
    std::string format = "text";
    bool timing = false;
};

SearchOptions search_opts(const Options& o) {
    int t = o.threads > 0 ? o.threads : int(std::thread::hardware_concurrency());
    return SearchOptions{std::max(1, t)};
}

std::string dec_str(const ApDecomposition& d) {
    std::ostringstream os;
    os << "k=" << d.diff << " x=" << d.first << ":";
    for (const auto& f : d.factors) os << " <" << f.generator << ">_" << f.order;
    if (d.weak) os << " weak";
    return os.str();
}

json dec_json(const ApDecomposition& d) {
    json j;
    j["n"] = d.n;
    j["first"] = d.first;
    j["diff"] = d.diff;
    j["generators"] = d.generators();
    j["orders"] = d.orders();
    j["weak"] = d.weak;
    return j;
}

void dec_csv(std::ostream& os, const ApDecomposition& d) {
    os << d.n << "," << d.first << "," << d.diff;
    for (const auto& f : d.factors) os << "," << f.generator << "," << f.order;
    os << "," << (d.weak ? "weak" : "strong") << "\n";
}

// envelope emission; the payload json is only built for --format json
struct Report {
    std::string command;
    json parameters;
    json payload;
    std::ostringstream text;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    int emit(const Options& o) {
        if (o.format == "json") {
            json env;
            env["command"] = command;
            env["parameters"] = parameters;
            env["version"] = kVersion;
            if (o.timing) {
                auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
                env["runtime_ms"] = ms;
            } else {
                env["runtime_ms"] = nullptr;
            }
            env["result"] = payload;
            std::cout << env.dump(2) << "\n";
        } else {
            std::cout << text.str();
            if (o.timing) {
                auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
                std::cout << "# runtime " << ms << " ms\n";
            }
        }
        return 0;
    }
};

// ---------------------------------------------------------------- find ----

int cmd_find(const Options& o, i64 n, bool weak, bool four) {
    if (n < 3) throw std::invalid_argument("find: n must be >= 3");
    Modulus m(n);
    auto decs = four ? find_4ap(m, weak, search_opts(o)) : find_3ap(m, weak, search_opts(o));

    Report r;
    r.command = "find";
    r.parameters = {{"n", n}, {"weak", weak}, {"four", four}};
    if (o.format == "json") {
        r.payload["phi"] = m.phi();
        r.payload["lambda"] = m.lambda();
        r.payload["xi"] = m.xi();
        r.payload["count"] = decs.size();
        r.payload["decompositions"] = json::array();
        for (const auto& d : decs) r.payload["decompositions"].push_back(dec_json(d));
    } else if (o.format == "csv") {
        r.text << "n,first,diff,g0,o0,g1,o1,g2,o2" << (four ? ",g3,o3" : "") << ",strength\n";
        for (const auto& d : decs) dec_csv(r.text, d);
    } else {
        r.text << "# find n=" << n << " phi=" << m.phi() << " lambda=" << m.lambda()
               << " xi=" << m.xi() << (four ? " four" : "") << (weak ? " weak" : "") << "\n";
        for (const auto& d : decs) r.text << dec_str(d) << "\n";
        r.text << "count " << decs.size() << "\n";
    }
    return r.emit(o);
}

// ---------------------------------------------------------------- lift ----

int cmd_lift(const Options& o, i64 n, i64 p, int alpha) {
    Modulus m(n);
    auto decs = find_3ap(m, true, search_opts(o));
    Report r;
    r.command = "lift";
    r.parameters = {{"n", n}, {"p", p}, {"alpha", alpha}};

    if (alpha > 1) {
        if (n != p) throw std::invalid_argument("lift: --alpha requires n = p prime");
        json arr = json::array();
        for (const auto& d : decs) {
            auto c = classify_case(d, p);
            if (c.p_divisible_orders != 0) continue;
            if (!is_productive(d, p)) {
                r.text << "unproductive: " << dec_str(d) << "\n";
                continue;
            }
            auto lifted = lift_to_prime_power(d, alpha);
            r.text << dec_str(d) << "  ->  U_" << lifted.n << " " << dec_str(lifted) << "\n";
            if (o.format == "json") {
                json e;
                e["source"] = dec_json(d);
                e["lift"] = dec_json(lifted);
                arr.push_back(e);
            }
        }
        r.payload["lifts"] = arr;
        return r.emit(o);
    }

    static const char* kCaseNames[] = {"p^2 | n", "p | n exactly", "p coprime to n"};
    json arr = json::array();
    for (const auto& d : decs) {
        auto rep = lift_decompositions(d, p);
        r.text << "source " << dec_str(d) << "\n";
        r.text << "  case: " << kCaseNames[int(rep.lift_case.kind)];
        if (rep.lift_case.kind == LiftCaseKind::exactly_divides)
            r.text << ", p-divisible orders: " << rep.lift_case.p_divisible_orders;
        r.text << "\n";
        if (rep.productive) r.text << "  productive: " << (*rep.productive ? "yes" : "no") << "\n";
        if (rep.spurious_lifts)
            r.text << "  spurious lifts: (" << (*rep.spurious_lifts)[0] << ", "
                   << (*rep.spurious_lifts)[1] << ", " << (*rep.spurious_lifts)[2] << ")\n";
        for (const auto& res : rep.results) r.text << "  lift " << dec_str(res) << "\n";
        r.text << "  lifts: " << rep.results.size() << "\n";
        if (o.format == "json") {
            json e;
            e["source"] = dec_json(d);
            e["case"] = kCaseNames[int(rep.lift_case.kind)];
            e["p_divisible_orders"] = rep.lift_case.p_divisible_orders;
            if (rep.productive) e["productive"] = *rep.productive;
            if (rep.spurious_lifts) e["spurious_lifts"] = *rep.spurious_lifts;
            e["lifts"] = json::array();
            for (const auto& res : rep.results) e["lifts"].push_back(dec_json(res));
            arr.push_back(e);
        }
    }
    r.payload["sources"] = arr;
    return r.emit(o);
}

// ------------------------------------------------------------------ gf ----

int cmd_gf(const Options& o, i64 p, int k, const std::string& poly_arg, bool all) {
    std::optional<std::vector<i64>> poly;
    if (!poly_arg.empty()) {
        std::vector<i64> cs;
        std::stringstream ss(poly_arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) cs.push_back(std::stoll(tok));
        poly = cs;
    }
    auto f = Field::build(p, k, poly);
    auto decs = find_3ap_field(f);

    // paper mode keeps the first decomposition found per order multiset
    std::vector<FieldDecomposition> shown;
    if (all) {
        shown = decs;
    } else {
        std::vector<std::array<i64, 3>> seen;
        for (const auto& d : decs) {
            auto ms = d.orders;
            std::sort(ms.begin(), ms.end());
            if (std::find(seen.begin(), seen.end(), ms) != seen.end()) continue;
            seen.push_back(ms);
            shown.push_back(d);
        }
    }

    Report r;
    r.command = "gf";
    r.parameters = {{"p", p}, {"k", k}, {"all", all}};
    std::ostringstream polytext;
    for (int i = k; i >= 0; --i) {
        if (f.spec().poly[i] == 0) continue;
        polytext << (polytext.str().empty() ? "" : " + ");
        if (i == 0 || f.spec().poly[i] != 1) polytext << f.spec().poly[i];
        if (i > 0) polytext << "x";
        if (i > 1) polytext << "^" << i;
    }
    r.text << "# GF(" << p << "^" << k << ") q=" << f.q() << " poly " << polytext.str() << "\n";
    for (const auto& d : shown) {
        r.text << "z^" << d.logs[0] << "_" << d.orders[0] << " z^" << d.logs[1] << "_"
               << d.orders[1] << " z^" << d.logs[2] << "_" << d.orders[2] << "\n";
    }
    r.text << "count " << shown.size() << (all ? "" : " (one per order multiset)") << "\n";
    if (o.format == "json") {
        r.payload["q"] = f.q();
        r.payload["poly"] = f.spec().poly;
        r.payload["decompositions"] = json::array();
        for (const auto& d : shown) {
            json e;
            e["logs"] = d.logs;
            e["orders"] = d.orders;
            e["elements"] = d.elems;
            r.payload["decompositions"].push_back(e);
        }
        r.payload["prime_subfield_check"] = prime_subfield_check(f);
    }
    return r.emit(o);
}

// --------------------------------------------------------------- table ----

struct Diff {
    int checked = 0;
    std::vector<std::string> mismatches;
    std::vector<std::string> extras;

    void print(std::ostream& os) const {
        for (const auto& m : mismatches) os << "MISMATCH " << m << "\n";
        for (const auto& e : extras) os << "extra (not in the reference table) " << e << "\n";
        os << "# paper-diff: " << checked << " reference rows checked, " << mismatches.size()
           << " mismatches, " << extras.size() << " extras\n";
    }
};

// table D
void table_d(Report& r, const Options& o, i64 limit, bool diff_paper) {
    auto rows = count_scan(limit, search_opts(o));
    std::map<i64, std::pair<i64, i64>> best; // xi -> (D, argmax n)
    for (const auto& row : rows) {
        auto& b = best[row.xi];
        if (row.strong > b.first) b = {row.strong, row.n};
    }
    r.text << "# xi -> D (maximum number of 3AP decompositions), n <= " << limit << "\n";
    json arr = json::array();
    for (const auto& [x, b] : best) {
        r.text << "xi=" << x << " D=" << b.first << " (n=" << b.second << ")\n";
        arr.push_back({{"xi", x}, {"D", b.first}, {"n", b.second}});
    }
    r.payload["rows"] = arr;
    if (diff_paper) {
        Diff d;
        for (const auto& [x, D] : golden::d_table) {
            ++d.checked;
            auto it = best.find(x);
            if (it == best.end() || it->second.first != D)
                d.mismatches.push_back("xi=" + std::to_string(x) + ": reference D=" +
                                       std::to_string(D) + " computed " +
                                       (it == best.end() ? "none"
                                                         : std::to_string(it->second.first)));
        }
        for (const auto& [x, b] : best)
            if (b.first > 0 &&
                !std::any_of(golden::d_table.begin(), golden::d_table.end(),
                             [&](auto& g) { return g.first == x; }))
                d.extras.push_back("xi=" + std::to_string(x));
        d.print(r.text);
    }
}

std::string gdec_str(const golden::Dec& g) {
    std::ostringstream os;
    os << "n=" << g.n << ":";
    for (int i = 0; i < 3; ++i) os << " <" << g.gens[i] << ">_" << g.orders[i];
    return os.str();
}

void table_1(Report& r, const Options& o, i64 limit, bool diff_paper) {
    (void)o;
    auto rows = scan_pq_root_pairs(limit);
    json arr = json::array();
    for (const auto& row : rows) {
        r.text << "n=" << row.n << " = " << row.p << " x " << row.q << ": " << row.pairs.size()
               << " pair(s)\n";
        for (const auto& pr : row.pairs) {
            r.text << "  " << dec_str(pr.dec) << "   ~   " << dec_str(pr.dec_mate) << "\n";
            json e;
            e["n"] = row.n;
            e["x"] = pr.x;
            e["dec"] = dec_json(pr.dec);
            e["mate_x"] = pr.x_mate;
            e["mate"] = dec_json(pr.dec_mate);
            arr.push_back(e);
        }
    }
    r.payload["rows"] = arr;
    if (diff_paper) {
        Diff d;
        for (const auto& [ga, gb] : golden::pq_pair_rows) {
            ++d.checked;
            bool found = false;
            for (const auto& row : rows)
                for (const auto& pr : row.pairs)
                    if ((golden::matches(pr.dec, ga) && golden::matches(pr.dec_mate, gb)) ||
                        (golden::matches(pr.dec, gb) && golden::matches(pr.dec_mate, ga)))
                        found = true;
            if (!found) d.mismatches.push_back(gdec_str(ga) + " (pair not found)");
        }
        for (i64 n : golden::pq_pair_uncovered) {
            ++d.checked;
            for (const auto& row : rows)
                if (row.n == n && !row.pairs.empty())
                    d.mismatches.push_back("n=" + std::to_string(n) +
                                           " expected no pairs, found some");
        }
        d.print(r.text);
    }
}

void table_2(Report& r, const Options& o, i64 limit, bool diff_paper) {
    auto rows = scan_weak_lifts(limit, search_opts(o));
    static const char* kTypes = "ABC-";
    json arr = json::array();
    for (const auto& row : rows) {
        r.text << "n=" << row.n << " = " << row.p << " x " << row.q << " type "
               << kTypes[int(row.type)] << " star@" << row.star_pos << ": " << dec_str(row.dec)
               << "\n";
        json e;
        e["n"] = row.n;
        e["p"] = row.p;
        e["q"] = row.q;
        e["type"] = std::string(1, kTypes[int(row.type)]);
        e["star_pos"] = row.star_pos;
        e["dec"] = dec_json(row.dec);
        arr.push_back(e);
    }
    r.payload["rows"] = arr;
    if (diff_paper) {
        // the reference table is explicitly a selection ("some lifts"), so
        // extras are expected; every reference row must appear with its type
        Diff d;
        for (const auto& g : golden::weak_lift_rows) {
            ++d.checked;
            bool found = false, type_ok = false;
            for (const auto& row : rows) {
                if (row.q != g.q || !golden::matches(row.dec, g.dec)) continue;
                found = true;
                type_ok = int(row.type) == g.type;
            }
            if (!found)
                d.mismatches.push_back(gdec_str(g.dec) + " (row not found)");
            else if (!type_ok)
                d.mismatches.push_back(gdec_str(g.dec) + " (type differs)");
        }
        d.print(r.text);
    }
}

void table_3(Report& r, const Options& o, i64 limit, bool diff_paper) {
    auto rows = table3_report(limit, search_opts(o));
    json arr = json::array();
    r.text << "# n = k*p^2: total, lifts from strong, lifts from weak, other"
              " (* = sources exist but their special lifts are in AP)\n";
    for (const auto& row : rows) {
        r.text << row.n << " = " << row.k << "*" << row.p << "^2: " << row.total << " "
               << row.from_strong << (row.star_strong ? "*" : "") << " " << row.from_weak
               << (row.star_weak ? "*" : "") << " " << row.other << "\n";
        arr.push_back({{"n", row.n},
                       {"k", row.k},
                       {"p", row.p},
                       {"total", row.total},
                       {"from_strong", row.from_strong},
                       {"from_weak", row.from_weak},
                       {"other", row.other},
                       {"star_strong", row.star_strong},
                       {"star_weak", row.star_weak}});
    }
    r.payload["rows"] = arr;
    if (diff_paper) {
        Diff d;
        for (const auto& g : golden::table3) {
            ++d.checked;
            bool ok = false;
            for (const auto& row : rows)
                if (row.n == g.n)
                    ok = row.total == g.total && row.from_strong == g.from_strong &&
                         row.from_weak == g.from_weak && row.other == g.other &&
                         row.star_strong == g.star_strong && row.star_weak == g.star_weak;
            if (!ok) d.mismatches.push_back("n=" + std::to_string(g.n));
        }
        for (const auto& row : rows)
            if (!std::any_of(golden::table3.begin(), golden::table3.end(),
                             [&](auto& g) { return g.n == row.n; }))
                d.extras.push_back("n=" + std::to_string(row.n));
        d.print(r.text);
    }
}

void table_coverage(Report& r, const Options& o, const std::string& which, i64 limit,
                    bool diff_paper) {
    auto s = scan_order23m(limit, search_opts(o));
    const std::vector<CoverageRow>* rows = nullptr;
    const std::vector<golden::Dec>* gold = nullptr;
    if (which == "coverage-2.1") {
        rows = &s.involution;
        gold = &golden::coverage_involution;
    } else if (which == "coverage-2.2") {
        rows = &s.cube;
        gold = &golden::coverage_cube;
    } else {
        rows = &s.residual;
    }
    r.text << "# class primes below " << limit << ": " << s.class_primes.size() << "\n";
    r.text << "# covered: " << rows->size() << "\n";
    json arr = json::array();
    if (limit <= 2000) {
        for (const auto& row : *rows) {
            for (const auto& oc : row.outcomes) {
                r.text << "n=" << row.n << ": " << dec_str(*oc.witness);
                if (!oc.note.empty()) r.text << "  (" << oc.note << ")";
                r.text << "\n";
                json e;
                e["n"] = row.n;
                e["dec"] = dec_json(*oc.witness);
                if (!oc.note.empty()) e["note"] = oc.note;
                arr.push_back(e);
            }
        }
        r.text << "uncovered (no construction applies):";
        for (i64 n : s.uncovered) r.text << " " << n;
        r.text << "\n";
    }
    r.payload["class_primes"] = s.class_primes.size();
    r.payload["covered"] = rows->size();
    r.payload["rows"] = arr;
    r.payload["uncovered"] = s.uncovered;
    if (diff_paper && limit <= 2000 && gold) {
        Diff d;
        for (const auto& g : *gold) {
            ++d.checked;
            bool found = false;
            for (const auto& row : *rows)
                for (const auto& oc : row.outcomes)
                    if (golden::matches(*oc.witness, g)) found = true;
            if (!found) d.mismatches.push_back(gdec_str(g) + " (candidate erratum?)");
        }
        d.print(r.text);
    }
}

void table_type25(Report& r, const Options& o, char variant, i64 limit, bool diff_paper) {
    auto s = scan_order25n(limit, search_opts(o));
    const std::vector<CoverageRow>& rows = variant == 'a' ? s.a : variant == 'b' ? s.b : s.c;
    const std::vector<golden::Dec>& gold =
        variant == 'a' ? golden::type_a : variant == 'b' ? golden::type_b : golden::type_c;
    json arr = json::array();
    for (const auto& row : rows) {
        for (const auto& oc : row.outcomes) {
            r.text << "n=" << row.n << ": " << dec_str(*oc.witness) << "\n";
            arr.push_back({{"n", row.n}, {"dec", dec_json(*oc.witness)}});
        }
    }
    r.text << "uncovered by any variant:";
    for (i64 n : s.uncovered) r.text << " " << n;
    r.text << "\n";
    r.payload["rows"] = arr;
    r.payload["uncovered"] = s.uncovered;
    if (diff_paper) {
        Diff d;
        for (const auto& g : gold) {
            ++d.checked;
            bool found = false;
            for (const auto& row : rows)
                for (const auto& oc : row.outcomes)
                    if (golden::matches(*oc.witness, g)) found = true;
            if (!found) d.mismatches.push_back(gdec_str(g));
        }
        d.print(r.text);
    }
}

void table_section5(Report& r, const Options& o, i64 limit, bool diff_paper) {
    (void)o;
    auto rows = scan_weak_order_six(limit);
    json arr = json::array();
    for (const auto& row : rows) {
        for (const auto& d : row.decs) {
            r.text << "n=" << row.n << ": " << dec_str(d) << "\n";
            arr.push_back({{"n", row.n}, {"dec", dec_json(d)}});
        }
    }
    r.payload["rows"] = arr;
    if (diff_paper) {
        Diff d;
        for (const auto& g : golden::weak_six_rows) {
            ++d.checked;
            bool found = false;
            for (const auto& row : rows)
                for (const auto& dec : row.decs)
                    if (golden::matches(dec, g)) found = true;
            if (!found) d.mismatches.push_back(gdec_str(g));
        }
        d.print(r.text);
    }
}

void table_gf(Report& r, const Options& o, bool diff_paper) {
    (void)o;
    json arr = json::array();
    for (const auto& fp : golden::field_polys) {
        auto f = Field::build(fp.p, fp.k);
        auto decs = find_3ap_field(f);
        std::vector<std::array<i64, 3>> seen;
        for (const auto& d : decs) {
            auto ms = d.orders;
            std::sort(ms.begin(), ms.end());
            if (std::find(seen.begin(), seen.end(), ms) != seen.end()) continue;
            seen.push_back(ms);
            r.text << "GF(" << fp.p << "^" << fp.k << "): z^" << d.logs[0] << "_" << d.orders[0]
                   << " z^" << d.logs[1] << "_" << d.orders[1] << " z^" << d.logs[2] << "_"
                   << d.orders[2] << "\n";
            arr.push_back({{"p", fp.p}, {"k", fp.k}, {"logs", d.logs}, {"orders", d.orders}});
        }
    }
    r.payload["rows"] = arr;
    if (diff_paper) {
        Diff d;
        for (const auto& g : golden::field_decs) {
            ++d.checked;
            auto f = Field::build(g.p, g.k);
            bool found = false;
            for (const auto& dec : find_3ap_field(f)) {
                auto match = [&](bool rev) {
                    for (int i = 0; i < 3; ++i) {
                        int j = rev ? 2 - i : i;
                        if (dec.logs[j] != g.logs[i] || dec.orders[j] != g.orders[i]) return false;
                    }
                    return true;
                };
                if (match(false) || match(true)) found = true;
            }
            if (!found)
                d.mismatches.push_back("GF(" + std::to_string(g.p) + "^" + std::to_string(g.k) +
                                       ") z^" + std::to_string(g.logs[0]));
        }
        d.print(r.text);
    }
}

int cmd_table(const Options& o, const std::string& which, i64 limit, bool diff_paper) {
    Report r;
    r.command = "table";
    r.parameters = {{"which", which}, {"limit", limit}, {"diff_paper", diff_paper}};
    if (which == "D")
        table_d(r, o, limit, diff_paper);
    else if (which == "1")
        table_1(r, o, limit, diff_paper);
    else if (which == "2")
        table_2(r, o, limit, diff_paper);
    else if (which == "3")
        table_3(r, o, limit, diff_paper);
    else if (which == "coverage-2.1" || which == "coverage-2.2" || which == "coverage-2.3")
        table_coverage(r, o, which, limit, diff_paper);
    else if (which == "type-2.3a")
        table_type25(r, o, 'a', limit, diff_paper);
    else if (which == "type-2.3b")
        table_type25(r, o, 'b', limit, diff_paper);
    else if (which == "type-2.3c")
        table_type25(r, o, 'c', limit, diff_paper);
    else if (which == "section-5")
        table_section5(r, o, limit, diff_paper);
    else if (which == "gf")
        table_gf(r, o, diff_paper);
    else
        throw std::invalid_argument("table: unknown table '" + which + "'");
    return r.emit(o);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"arithmetic-progression decompositions of U_n and GF(p^k)"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    Options opt;
    app.add_option("--threads", opt.threads, "worker threads (default: hardware)");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_flag("--timing", opt.timing, "append runtime to the report");

    i64 n = 0, p = 0, limit = 1000;
    int k = 0, alpha = 1;
    bool weak = false, four = false, all = false, diff_paper = false;
    std::string which, poly;

    auto* find = app.add_subcommand("find", "enumerate AP decompositions of U_n");
    find->add_option("n", n, "modulus")->required();
    find->add_flag("--weak", weak, "include weak decompositions");
    find->add_flag("--four", four, "search 4-term progressions");

    auto* table = app.add_subcommand("table", "reproduce a reference table");
    table->add_option("which", which,
                      "D, 1, 2, 3, coverage-2.1, coverage-2.2, coverage-2.3, "
                      "type-2.3a, type-2.3b, type-2.3c, section-5, gf")
        ->required();
    table->add_option("--limit", limit, "scan bound")->capture_default_str();
    table->add_flag("--diff-paper", diff_paper, "diff against the embedded reference values");

    auto* lift = app.add_subcommand("lift", "lift decompositions of U_n to U_np");
    lift->add_option("n", n, "source modulus")->required();
    lift->add_option("p", p, "odd prime index")->required();
    lift->add_option("--alpha", alpha, "iterate to U_p^alpha (requires n = p)");

    auto* gf = app.add_subcommand("gf", "decompositions of GF(p^k)^x");
    gf->add_option("p", p, "characteristic")->required();
    gf->add_option("k", k, "degree")->required();
    gf->add_option("--poly", poly, "defining polynomial, constant term first (c0,c1,...)");
    gf->add_flag("--all", all, "list all decompositions, not one per order multiset");

    try {
        app.parse(argc, argv);
        if (find->parsed()) return cmd_find(opt, n, weak, four);
        if (table->parsed()) return cmd_table(opt, which, limit, diff_paper);
        if (lift->parsed()) return cmd_lift(opt, n, p, alpha);
        if (gf->parsed()) return cmd_gf(opt, p, k, poly, all);
        return 1;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1; // usage errors collapse to exit 1, --help to 0
    } catch (const invariant_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const family_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
