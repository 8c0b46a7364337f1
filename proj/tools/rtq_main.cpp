// rtq: compute, verify, render and batch quiver data for rational tangles.
//
// Exit codes: 0 success, 1 verification mismatch, 2 bad input,
// 3 internal invariant failure.

#include <CLI11.hpp>

#include "rtq/arc_diagram.hpp"
#include "rtq/loops.hpp"
#include "rtq/quiver.hpp"
#include "rtq/series_check.hpp"
#include "rtq/skein.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;

int jmax_cap() {
    if (const char* env = std::getenv("RTQ_JMAX_CAP")) {
        try {
            return std::max(0, std::stoi(env));
        } catch (...) {
            return 6;
        }
    }
    return 6;
}

rtq::Fraction parse_fraction_or_throw(const std::string& text) {
    return rtq::Fraction::parse(text);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::invalid_argument("cannot open output file " + path);
    os << content;
}

std::string quiver_text(const rtq::QuiverData& qd, const std::string& format) {
    if (format == "json") return qd.to_json();
    if (format == "csv") return qd.to_csv();
    return qd.to_pretty();
}

int run_quiver(const std::string& tangle, bool reduced, const std::string& format,
               const std::string& out) {
    rtq::Fraction f = parse_fraction_or_throw(tangle);
    rtq::ArcDiagram d = rtq::ArcDiagram::build(f);
    rtq::QuiverData qd = rtq::compute_quiver(d);
    if (reduced) qd = rtq::reduce_almost(qd, d.partition_xyz());
    write_output(out, quiver_text(qd, format));
    return kExitOk;
}

int run_poincare(const std::string& tangle, int j, bool specialize, const std::string& out) {
    rtq::Fraction f = parse_fraction_or_throw(tangle);
    if (j < 0 || j > jmax_cap()) throw std::invalid_argument("color out of range (see RTQ_JMAX_CAP)");
    rtq::WebPoly w = rtq::poincare(f, j);
    if (specialize) w = rtq::specialize_t(w);
    write_output(out, w.to_string());
    return kExitOk;
}

int run_verify(const std::string& tangle, int sweep, int jmax, const std::string& out) {
    if (jmax < 0 || jmax > jmax_cap()) {
        throw std::invalid_argument("jmax out of range (see RTQ_JMAX_CAP)");
    }
    std::vector<rtq::VerifyRecord> records;
    if (sweep > 0) {
        records = rtq::verify_sweep(sweep, jmax);
    } else {
        rtq::Fraction f = parse_fraction_or_throw(tangle);
        rtq::ArcDiagram d = rtq::ArcDiagram::build(f);
        rtq::QuiverData qd = rtq::compute_quiver(d);
        for (int j = 0; j <= jmax; ++j) records.push_back(rtq::verify_tangle_color(d, qd, j));
    }
    std::ostringstream os;
    bool all_ok = true;
    for (const auto& r : records) {
        os << rtq::to_json_line(r) << '\n';
        all_ok = all_ok && r.ok;
    }
    write_output(out, os.str());
    return all_ok ? kExitOk : kExitMismatch;
}

int run_svg(const std::string& tangle, const std::string& out) {
    rtq::Fraction f = parse_fraction_or_throw(tangle);
    rtq::ArcDiagram d = rtq::ArcDiagram::build(f);
    write_output(out, d.emit_svg());
    return kExitOk;
}

int run_batch(int sweep, int jmax, const std::string& out_dir, int jobs) {
    if (sweep < 2) throw std::invalid_argument("batch needs --sweep >= 2");
    if (jmax < 0 || jmax > jmax_cap()) {
        throw std::invalid_argument("jmax out of range (see RTQ_JMAX_CAP)");
    }
    std::filesystem::create_directories(out_dir);
    std::vector<rtq::Fraction> fractions = rtq::coprime_fractions(sweep);
    std::vector<std::string> names(fractions.size());
    std::vector<bool> ok(fractions.size(), true);

    auto work = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < fractions.size(); i += step) {
            const rtq::Fraction& f = fractions[i];
            rtq::ArcDiagram d = rtq::ArcDiagram::build(f);
            rtq::QuiverData qd = rtq::compute_quiver(d);
            rtq::QuiverData reduced = rtq::reduce_almost(qd, d.partition_xyz());
            std::ostringstream body;
            body << "{\"tangle\":\"" << f.to_string() << "\",\"quiver\":" << qd.to_json()
                 << ",\"almost\":" << reduced.to_json() << ",\"verify\":[";
            for (int j = 0; j <= jmax; ++j) {
                rtq::VerifyRecord rec = rtq::verify_tangle_color(d, qd, j);
                ok[i] = ok[i] && rec.ok;
                if (j) body << ',';
                body << rtq::to_json_line(rec);
            }
            body << "]}";
            std::string name = std::to_string(f.u) + "_" + std::to_string(f.v) + ".json";
            names[i] = name;
            std::ofstream os(std::filesystem::path(out_dir) / name, std::ios::binary);
            os << body.str() << '\n';
        }
    };
    if (jobs <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work, static_cast<std::size_t>(t), jobs);
        for (auto& t : pool) t.join();
    }

    std::ostringstream summary;
    summary << "{\"count\":" << fractions.size() << ",\"jmax\":" << jmax << ",\"tangles\":[";
    bool all_ok = true;
    for (std::size_t i = 0; i < fractions.size(); ++i) {
        if (i) summary << ',';
        summary << "{\"tangle\":\"" << fractions[i].to_string() << "\",\"file\":\"" << names[i]
                << "\",\"ok\":" << (ok[i] ? "true" : "false") << '}';
        all_ok = all_ok && ok[i];
    }
    summary << "]}";
    std::ofstream os(std::filesystem::path(out_dir) / "summary.json", std::ios::binary);
    os << summary.str() << '\n';
    return all_ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quiver-form data for rational tangles"};
    app.require_subcommand(1);

    std::string tangle;
    std::string format = "pretty";
    std::string out;
    bool reduced = false;
    bool specialize = false;
    int color = 1;
    int jmax = 2;
    int sweep = 0;
    int jobs = 1;

    auto* cmd_quiver = app.add_subcommand("quiver", "compute quiver data for one tangle");
    cmd_quiver->add_option("tangle", tangle, "fraction u/v")->required();
    cmd_quiver->add_flag("--reduced", reduced, "emit the almost-quiver reduction");
    cmd_quiver->add_option("--format", format, "json|csv|pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    cmd_quiver->add_option("-o,--out", out, "output file (stdout by default)");

    auto* cmd_poincare = app.add_subcommand("poincare", "twist-rule Poincare polynomial");
    cmd_poincare->add_option("tangle", tangle, "fraction u/v")->required();
    cmd_poincare->add_option("-j,--color", color, "color j")->required();
    cmd_poincare->add_flag("--specialize", specialize, "substitute t = -1");
    cmd_poincare->add_option("-o,--out", out, "output file");

    auto* cmd_verify = app.add_subcommand("verify", "compare expansion against the oracle");
    cmd_verify->add_option("tangle", tangle, "fraction u/v");
    cmd_verify->add_option("--sweep", sweep, "all coprime tangles with u+v <= N");
    cmd_verify->add_option("--jmax", jmax, "maximum color");
    cmd_verify->add_option("-o,--out", out, "output file");

    auto* cmd_svg = app.add_subcommand("svg", "render the arc diagram");
    cmd_svg->add_option("tangle", tangle, "fraction u/v")->required();
    cmd_svg->add_option("-o,--out", out, "output file");

    auto* cmd_batch = app.add_subcommand("batch", "write one JSON per tangle plus a summary");
    cmd_batch->add_option("--sweep", sweep, "all coprime tangles with u+v <= N")->required();
    cmd_batch->add_option("--jmax", jmax, "maximum color");
    cmd_batch->add_option("--out", out, "output directory")->required();
    cmd_batch->add_option("--jobs", jobs, "worker threads (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (cmd_quiver->parsed()) return run_quiver(tangle, reduced, format, out);
        if (cmd_poincare->parsed()) return run_poincare(tangle, color, specialize, out);
        if (cmd_verify->parsed()) {
            if (sweep == 0 && tangle.empty()) {
                throw std::invalid_argument("verify needs a tangle or --sweep");
            }
            return run_verify(tangle, sweep, jmax, out);
        }
        if (cmd_svg->parsed()) return run_svg(tangle, out);
        if (cmd_batch->parsed()) return run_batch(sweep, jmax, out, jobs);
    } catch (const rtq::ConstructionFailure& e) {
        std::cerr << "internal invariant failure: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitBadInput;
}
