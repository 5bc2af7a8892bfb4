#include "cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>
#include <variant>

#include "qvl/bps.hpp"
#include "qvl/errors.hpp"
#include "qvl/gsum.hpp"
#include "qvl/invariants.hpp"
#include "qvl/qcomb.hpp"
#include "qvl/qrational.hpp"
#include "qvl/scattering.hpp"
#include "qvl/serialize.hpp"

namespace qvl::cli {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_invalid = 2;

// ---------------------------------------------------------------- values --

using Value = std::variant<LaurentPoly, QRational, Int>;

Json value_json(const Value& v) {
    if (const auto* p = std::get_if<LaurentPoly>(&v)) return to_json(*p);
    if (const auto* r = std::get_if<QRational>(&v)) return to_json(*r);
    return Json(std::get<Int>(v).str());
}

std::string value_text(const Value& v) {
    if (const auto* p = std::get_if<LaurentPoly>(&v)) return p->text();
    if (const auto* r = std::get_if<QRational>(&v)) return r->text();
    return std::get<Int>(v).str();
}

bool values_equal(const Value& a, const Value& b) {
    if (std::holds_alternative<Int>(a) != std::holds_alternative<Int>(b)) return false;
    if (std::holds_alternative<Int>(a)) return std::get<Int>(a) == std::get<Int>(b);
    auto as_qr = [](const Value& v) {
        if (const auto* p = std::get_if<LaurentPoly>(&v)) return QRational(*p);
        return std::get<QRational>(v);
    };
    return as_qr(a) == as_qr(b);
}

// ------------------------------------------------------------- invariant --

struct PipelineValues {
    std::vector<std::pair<std::string, Value>> values;
    std::vector<std::string> notes;
};

bool pipeline_allowed(const std::string& selector, const std::string& pipeline) {
    if (pipeline == "all" || pipeline == "closed") return true;
    if (selector == "log" || selector == "open") return pipeline == "sum" || pipeline == "trace";
    if (selector == "g") return pipeline == "sum";
    return false;  // lmov, gv, dt have a single assembly route
}

QRational open_factor_times(const CurveClass& d, const LaurentPoly& nlog) {
    auto [w1, w2] = inter(d);
    const int sign = (w1 + w2) % 2 ? -1 : 1;
    QRational r(LaurentPoly(sign) * nlog, qint(w2));
    r.scale(Rational(1, w1));
    return r;
}

PipelineValues compute_invariant(const RunConfig& cfg) {
    PipelineValues out;
    const std::string& sel = cfg.selector;
    const std::string& pipe = cfg.pipeline;
    const bool all = pipe == "all";

    if (sel == "g") {
        const GParams p = *cfg.gparams;
        if (all || pipe == "closed") out.values.emplace_back("closed", g_closed(p));
        if (all || pipe == "sum") out.values.emplace_back("sum", g_enum(p));
        return out;
    }

    const CurveClass d = *cfg.degree;
    auto [w1, w2] = inter(d);
    const bool positive = w1 > 0 && w2 > 0;

    if (sel == "log") {
        if (all || pipe == "closed") out.values.emplace_back("closed", nlog_closed(d));
        if (positive) {
            if (all || pipe == "sum") out.values.emplace_back("sum", nlog_scat(d));
            if (all || pipe == "trace") out.values.emplace_back("trace", trace_nlog(d));
        } else if (!all) {
            throw std::domain_error("pipeline '" + pipe + "' needs positive intersections");
        } else {
            out.notes.push_back("vanishing intersection: d·D1 = " + std::to_string(w1) +
                                ", d·D2 = " + std::to_string(w2) + "; series is exactly 0");
        }
        return out;
    }
    if (sel == "open") {
        if (all || pipe == "closed") out.values.emplace_back("closed", open_closed(d));
        if (positive) {
            if (all || pipe == "sum")
                out.values.emplace_back("sum", open_factor_times(d, nlog_scat(d)));
            if (all || pipe == "trace")
                out.values.emplace_back("trace", open_factor_times(d, trace_nlog(d)));
        } else if (!all) {
            throw std::domain_error("pipeline '" + pipe + "' needs positive intersections");
        } else {
            out.notes.push_back("vanishing intersection: d·D1 = " + std::to_string(w1) +
                                ", d·D2 = " + std::to_string(w2) + "; series is exactly 0");
        }
        return out;
    }
    if (sel == "lmov") {
        out.values.emplace_back("closed", lmov(d));
        if (all) out.values.emplace_back("from-open", lmov_from_open(d));
        return out;
    }
    if (sel == "gv") {
        out.values.emplace_back("closed", gv(d));
        return out;
    }
    out.values.emplace_back("closed", dt_num(d));  // dt
    return out;
}

int run_invariant(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    PipelineValues pv = compute_invariant(cfg);
    bool agree = true;
    for (size_t i = 1; i < pv.values.size(); ++i)
        agree = agree && values_equal(pv.values[0].second, pv.values[i].second);

    const std::string where =
        cfg.selector == "g" ? to_string(*cfg.gparams) : to_string(*cfg.degree);
    if (cfg.format == "json") {
        Json j{{"command", "invariant"}, {"selector", cfg.selector}};
        if (cfg.degree)
            j["degree"] = Json::array({cfg.degree->d0, cfg.degree->d1, cfg.degree->d2, cfg.degree->d3});
        if (cfg.gparams)
            j["gparams"] = Json::array(
                {cfg.gparams->a, cfg.gparams->b, cfg.gparams->c, cfg.gparams->d, cfg.gparams->e});
        Json vals = Json::object();
        for (const auto& [name, v] : pv.values) vals[name] = value_json(v);
        j["pipelines"] = std::move(vals);
        j["agree"] = agree;
        j["notes"] = pv.notes;
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "selector,where,pipeline,value\n";
        for (const auto& [name, v] : pv.values)
            out << cfg.selector << "," << "\"" << where << "\"" << "," << name << ","
                << "\"" << value_text(v) << "\"\n";
    } else {
        for (const auto& [name, v] : pv.values)
            out << cfg.selector << where << " [" << name << "] = " << value_text(v) << "\n";
        for (const auto& n : pv.notes) out << "note: " << n << "\n";
        out << (agree ? "agree" : "DISAGREE") << "\n";
    }
    if (!agree) {
        err << "pipeline disagreement at " << where << "\n";
        return exit_failed;
    }
    return exit_ok;
}

// ---------------------------------------------------------------- verify --

VerifyReport dispatch_campaign(const RunConfig& cfg) {
    const Box box = cfg.box.value_or(Box{});
    const int qps_max = cfg.qps_max >= 0 ? cfg.qps_max : 5;
    auto d0_or = [&](int dflt) { return cfg.max_d0 >= 0 ? cfg.max_d0 : dflt; };

    if (cfg.campaign == "scat-vs-closed") return verify_scat_vs_closed(d0_or(4));
    if (cfg.campaign == "trace-vs-scat") return verify_trace_vs_scat(d0_or(4));
    if (cfg.campaign == "log-open") return verify_log_open(d0_or(4));
    if (cfg.campaign == "recursion") return verify_recursion(box);
    if (cfg.campaign == "gtilde-recursion") return verify_gtilde_recursion(box);
    if (cfg.campaign == "qps") return verify_qps(qps_max);
    if (cfg.campaign == "integrality") return verify_integrality(d0_or(4));
    // symmetry: the box's c bound doubles as the c/d sweep bound
    return verify_symmetry(d0_or(6), cfg.box.value_or(Box{4, 4, 4, 4, 8}));
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const VerifyReport rep = dispatch_campaign(cfg);
    if (cfg.format == "json") {
        Json j{{"command", "verify"},
               {"campaign", rep.campaign},
               {"checked", rep.checked},
               {"failed", rep.failed},
               {"pass", rep.ok()}};
        if (!rep.ok()) j["first_counterexample"] = rep.first_counterexample;
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "campaign,checked,failed,pass\n"
            << rep.campaign << "," << rep.checked << "," << rep.failed << ","
            << (rep.ok() ? "true" : "false") << "\n";
    } else {
        out << "campaign: " << rep.campaign << "\n"
            << "checked: " << rep.checked << "\n"
            << "failed: " << rep.failed << "\n";
        if (!rep.ok()) out << "first counterexample: " << rep.first_counterexample << "\n";
        out << (rep.ok() ? "PASS" : "FAIL") << "\n";
    }
    if (!rep.ok()) err << "verification failed: " << rep.campaign << "\n";
    return exit_for(rep);
}

// ----------------------------------------------------------------- table --

Value table_value(const CurveClass& d, const std::string& sel) {
    if (sel == "log") return nlog_closed(d).to_laurent();  // exact on admissible classes
    if (sel == "open") return open_closed(d);
    if (sel == "lmov") return lmov(d);
    if (sel == "gv") return gv(d);
    return dt_num(d);  // dt
}

Value table_value_from_json(const std::string& sel, const Json& j) {
    if (sel == "log" || sel == "lmov") return laurent_from_json(j);
    if (sel == "open") return qrational_from_json(j);
    if (!j.is_string()) throw std::invalid_argument("table cache: malformed integer");
    return Int(j.get<std::string>());
}

struct TableRow {
    CurveClass d;
    Value value;
    bool from_cache = false;
};

int run_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const std::string& sel = cfg.selector;
    const bool needs_positive = sel == "lmov" || sel == "gv" || sel == "dt";

    std::vector<TableRow> rows;
    for (int d0 = 0; d0 <= cfg.max_d0; ++d0)
        for (int d1 = 0; d1 <= d0; ++d1)
            for (int d2 = 0; d2 <= d0; ++d2)
                for (int d3 = 0; d3 <= d0; ++d3) {
                    const CurveClass d{d0, d1, d2, d3};
                    if (!admissible(d)) continue;
                    auto [w1, w2] = inter(d);
                    if (needs_positive && (w1 <= 0 || w2 <= 0)) continue;
                    rows.push_back({d, Value{}, false});
                }

    // cache: read before compute, rewrite atomically afterwards
    std::map<std::string, Json> cache;
    bool cache_enabled = !cfg.cache_path.empty();
    if (cache_enabled) {
        std::ifstream in(cfg.cache_path);
        if (in) {
            try {
                Json j = Json::parse(in);
                for (const auto& [k, v] : j.items()) cache[k] = v;
            } catch (const std::exception& e) {
                err << "cache: ignoring unreadable file " << cfg.cache_path << ": " << e.what()
                    << "\n";
            }
        }
    }
    auto cache_key = [&](const CurveClass& d) {
        return std::to_string(d.d0) + "," + std::to_string(d.d1) + "," + std::to_string(d.d2) +
               "," + std::to_string(d.d3) + ":" + sel;
    };

    long long hits = 0;
    std::vector<size_t> to_compute;
    for (size_t i = 0; i < rows.size(); ++i) {
        auto it = cache.find(cache_key(rows[i].d));
        if (it != cache.end()) {
            try {
                rows[i].value = table_value_from_json(sel, it->second);
                rows[i].from_cache = true;
                ++hits;
                continue;
            } catch (const std::exception&) {
                // malformed entry: fall through and recompute
            }
        }
        to_compute.push_back(i);
    }

    const int jobs = std::max(1, cfg.jobs);
    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const size_t slot = next.fetch_add(1);
            if (slot >= to_compute.size()) return;
            try {
                TableRow& row = rows[to_compute[slot]];
                row.value = table_value(row.d, sel);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    if (jobs == 1 || to_compute.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    if (cache_enabled) {
        for (const auto& row : rows) cache[cache_key(row.d)] = value_json(row.value);
        Json merged = Json::object();
        for (const auto& [k, v] : cache) merged[k] = v;  // std::map iteration: sorted keys
        const std::string tmp = cfg.cache_path + ".tmp";
        std::ofstream o(tmp, std::ios::trunc);
        if (o) {
            o << merged.dump(1) << "\n";
            o.close();
            std::error_code ec;
            std::filesystem::rename(tmp, cfg.cache_path, ec);
            if (ec) err << "cache: cannot replace " << cfg.cache_path << ": " << ec.message() << "\n";
        } else {
            err << "cache: cannot write " << tmp << "\n";
        }
        err << "cache: " << hits << " hits, " << (rows.size() - static_cast<size_t>(hits))
            << " misses\n";
    }

    if (cfg.format == "json") {
        Json j{{"command", "table"}, {"selector", sel}, {"max_d0", cfg.max_d0}};
        Json arr = Json::array();
        for (const auto& row : rows)
            arr.push_back(Json{{"degree", Json::array({row.d.d0, row.d.d1, row.d.d2, row.d.d3})},
                               {"value", value_json(row.value)}});
        j["rows"] = std::move(arr);
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "d0,d1,d2,d3,value\n";
        for (const auto& row : rows)
            out << row.d.d0 << "," << row.d.d1 << "," << row.d.d2 << "," << row.d.d3 << ",\""
                << value_text(row.value) << "\"\n";
    } else {
        for (const auto& row : rows)
            out << sel << to_string(row.d) << " = " << value_text(row.value) << "\n";
    }
    return exit_ok;
}

// ----------------------------------------------------------------- parse --

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out,
                                    std::ostream& err, int& code) {
    RunConfig cfg;
    CLI::App app{"exact higher-genus log/open Gromov-Witten series of the dP3(0,2) geometry"};
    app.require_subcommand(1);

    std::vector<int> degree, gparams, box;
    const auto fmt = CLI::IsMember({"json", "csv", "text"});

    CLI::App* inv = app.add_subcommand("invariant", "compute one invariant of one class");
    inv->add_option("selector", cfg.selector, "log | open | lmov | gv | dt | g")
        ->required()
        ->check(CLI::IsMember({"log", "open", "lmov", "gv", "dt", "g"}));
    inv->add_option("--degree", degree, "curve class d0,d1,d2,d3")->delimiter(',');
    inv->add_option("--gparams", gparams, "block-sum arguments a,b,c,d,e")->delimiter(',');
    inv->add_option("--pipeline", cfg.pipeline, "closed | sum | trace | all")
        ->check(CLI::IsMember({"closed", "sum", "trace", "all"}));
    inv->add_option("--format", cfg.format)->check(fmt);

    CLI::App* ver = app.add_subcommand("verify", "run an exhaustive verification campaign");
    ver->add_option("campaign", cfg.campaign,
                    "scat-vs-closed | trace-vs-scat | log-open | recursion | gtilde-recursion | "
                    "qps | integrality | symmetry")
        ->required()
        ->check(CLI::IsMember({"scat-vs-closed", "trace-vs-scat", "log-open", "recursion",
                               "gtilde-recursion", "qps", "integrality", "symmetry"}));
    ver->add_option("--max-d0", cfg.max_d0)->check(CLI::NonNegativeNumber);
    ver->add_option("--box", box, "bounds a,b,c,d,e")->delimiter(',');
    ver->add_option("--max", cfg.qps_max, "parameter bound for the qps campaign")
        ->check(CLI::NonNegativeNumber);
    ver->add_option("--format", cfg.format)->check(fmt);

    CLI::App* tab = app.add_subcommand("table", "tabulate an invariant over all admissible classes");
    tab->add_option("--selector", cfg.selector, "log | open | lmov | gv | dt")
        ->required()
        ->check(CLI::IsMember({"log", "open", "lmov", "gv", "dt"}));
    tab->add_option("--max-d0", cfg.max_d0)->required()->check(CLI::NonNegativeNumber);
    tab->add_option("--format", cfg.format)->check(fmt);
    tab->add_option("--cache", cfg.cache_path, "JSON cache file (default: $QVL_CACHE)");
    tab->add_option("--jobs", cfg.jobs, "worker threads across rows")->check(CLI::PositiveNumber);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("qvl");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        code = app.exit(e, out, err);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        code = exit_invalid;
        return std::nullopt;
    }

    if (inv->parsed()) cfg.command = "invariant";
    if (ver->parsed()) cfg.command = "verify";
    if (tab->parsed()) cfg.command = "table";

    auto fail = [&](const std::string& msg) {
        err << "error: " << msg << "\n";
        code = exit_invalid;
        return std::nullopt;
    };

    if (!degree.empty()) {
        if (degree.size() != 4) return fail("--degree needs exactly 4 components");
        cfg.degree = CurveClass{degree[0], degree[1], degree[2], degree[3]};
    }
    if (!gparams.empty()) {
        if (gparams.size() != 5) return fail("--gparams needs exactly 5 components");
        cfg.gparams = GParams{gparams[0], gparams[1], gparams[2], gparams[3], gparams[4]};
    }
    if (!box.empty()) {
        if (box.size() != 5) return fail("--box needs exactly 5 components");
        for (int v : box)
            if (v < 0) return fail("--box bounds must be non-negative");
        cfg.box = Box{box[0], box[1], box[2], box[3], box[4]};
    }

    if (cfg.command == "invariant") {
        if (cfg.selector == "g") {
            if (!cfg.gparams) return fail("selector 'g' needs --gparams");
        } else if (!cfg.degree) {
            return fail("selector '" + cfg.selector + "' needs --degree");
        }
        if (!pipeline_allowed(cfg.selector, cfg.pipeline))
            return fail("pipeline '" + cfg.pipeline + "' does not apply to selector '" +
                        cfg.selector + "'");
    }
    if (cfg.command == "table" && cfg.cache_path.empty()) {
        if (const char* env = std::getenv("QVL_CACHE")) cfg.cache_path = env;
    }
    return cfg;
}

}  // namespace

int exit_for(const VerifyReport& rep) { return rep.ok() ? exit_ok : exit_failed; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    int code = exit_ok;
    std::optional<RunConfig> cfg = parse_args(args, out, err, code);
    if (!cfg) return code;
    try {
        if (cfg->command == "invariant") return run_invariant(*cfg, out, err);
        if (cfg->command == "verify") return run_verify(*cfg, out, err);
        return run_table(*cfg, out, err);
    } catch (const IntegralityError& e) {
        err << "integrality failure: " << e.what() << "\n";
        return exit_failed;
    } catch (const PoleError& e) {
        err << "error: " << e.what() << "\n";
        return exit_failed;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    }
}

}  // namespace qvl::cli
