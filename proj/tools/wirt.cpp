// wirt: compute Wirtinger numbers of knot/link diagrams from Gauss codes,
// verify the coloring-sequence properties behind them, and run batch
// tabulations with twist-number and volume bounds.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wirt/wirt.hpp"

namespace {

std::vector<int> parse_seed_names(const wirt::Diagram& d, const std::string& csv_names) {
    std::vector<int> seeds;
    std::string token;
    std::stringstream ss(csv_names);
    while (std::getline(ss, token, ',')) {
        token = wirt::csv::trim(token);
        if (!token.empty())
            seeds.push_back(d.strand_by_name(token));
    }
    return seeds;
}

void print_record_text(const wirt::TabulationRecord& rec) {
    std::cout << "gauss: " << rec.gauss << "\n"
              << "crossings: " << rec.crossings << "\n"
              << "components: " << rec.components << "\n";
    if (rec.omega) {
        std::cout << "omega: " << *rec.omega << "\n";
        std::cout << "witness:";
        for (const auto& name : rec.witness)
            std::cout << ' ' << name;
        std::cout << "\n";
    }
    if (rec.twist_number)
        std::cout << "twist_number: " << *rec.twist_number << "\n"
                  << "bound_2t: " << *rec.bound_2t << "\n";
    if (rec.checks.computed)
        std::cout << "checks: " << rec.checks.brief() << "\n";
    if (!rec.diagnostic.empty())
        std::cout << "note: " << rec.diagnostic << "\n";
}

int run_compute(const std::string& gauss, bool as_json) {
    wirt::RowInput in;
    in.gauss = gauss;
    const auto rec = wirt::process_entry(in, {});
    if (rec.status == wirt::RecordStatus::Skipped && !rec.omega) {
        std::cerr << "error: " << rec.diagnostic << "\n";
        return 1;
    }
    if (as_json)
        std::cout << wirt::record_to_json(rec).dump(2) << "\n";
    else
        print_record_text(rec);
    return 0;
}

int run_verify(const std::string& gauss, const std::string& seed_names) {
    const auto d = wirt::build_diagram(wirt::parse_gauss(gauss));
    const auto seeds = parse_seed_names(d, seed_names);
    const auto res = wirt::extend_to_fixpoint(d, seeds);
    std::cout << "diagram:\n" << wirt::emit_diagram(d);
    std::cout << "complete: " << (res.complete ? "yes" : "no") << "\n";
    std::cout << "order:";
    for (int s : res.sequence.order)
        std::cout << ' ' << d.name_of(s) << "(h=" << wirt::height(res.sequence, s) << ")";
    std::cout << "\n";
    if (!res.complete) {
        std::cout << "uncolored:";
        for (int s = 0; s < d.num_strands(); ++s)
            if (!res.state.is_colored(s))
                std::cout << ' ' << d.name_of(s);
        std::cout << "\nnot a Wirtinger generating system\n";
        return 0;
    }
    const auto summary = wirt::run_property_checks(d, res);
    std::cout << "cut_split: " << (summary.cut_split ? "yes" : "no") << "\n";
    std::cout << "connectivity_ok: " << (summary.report.connectivity_ok ? "yes" : "no") << "\n";
    std::cout << "unique_max_ok: " << (summary.report.unique_max_ok ? "yes" : "no") << "\n";
    if (summary.overstrand_checked) {
        std::cout << "overstrand_height_ok: "
                  << (summary.report.overstrand_height_ok ? "yes" : "no") << "\n";
        for (const auto& [color, crossing] : summary.report.link_exception_crossings)
            std::cout << "  exception: color " << color << " at crossing " << crossing << "\n";
    } else {
        std::cout << "overstrand_height_ok: skipped (cut-split diagram)\n";
    }
    for (const auto& v : summary.report.violations)
        std::cout << "  violation: " << v << "\n";
    if (summary.passed()) {
        const auto profile = wirt::reconstruct_morse_profile(d, res);
        std::cout << "profile_maxima: " << wirt::count_local_maxima(profile) << "\n";
        for (size_t comp = 0; comp < profile.per_component.size(); ++comp) {
            std::cout << "component " << comp << ":";
            for (const auto& pt : profile.per_component[comp]) {
                std::cout << ' ' << (pt.kind == wirt::CriticalPoint::Kind::Max ? "max@" : "min@");
                if (pt.at_strand)
                    std::cout << d.name_of(pt.site);
                else
                    std::cout << 'x' << pt.site;
                std::cout << "(z=" << pt.value << ")";
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int run_bounds(const std::string& gauss) {
    const auto d = wirt::build_diagram(wirt::parse_gauss(gauss));
    const auto regions = wirt::twist_regions(d);
    std::cout << "crossings: " << d.num_crossings() << "\n";
    std::cout << "twist_regions:";
    for (const auto& region : regions) {
        std::cout << " {";
        for (size_t i = 0; i < region.crossings.size(); ++i)
            std::cout << (i ? "," : "") << region.crossings[i];
        std::cout << "}";
    }
    std::cout << "\nt: " << regions.size() << "\n";
    std::cout << "bound_2t: " << 2 * regions.size() << "\n";
    const auto seeds = wirt::twist_seeding(d, regions);
    std::cout << "twist_seeds:";
    for (int s : seeds)
        std::cout << ' ' << d.name_of(s);
    std::cout << " (generating: "
              << (wirt::is_generating_system(d, seeds) ? "yes" : "no") << ")\n";
    const auto outcome = wirt::wirtinger_number(d);
    if (const auto* result = std::get_if<wirt::WirtingerResult>(&outcome)) {
        const auto vb = wirt::volume_lower_bound(result->omega);
        std::cout << "omega: " << result->omega << "\n";
        std::cout << "volume_bound: " << vb.lower_bound << " (C = v3/6 = " << vb.c_const
                  << ")\n";
    }
    return 0;
}

int run_batch_cmd(const std::string& input, const std::string& output, int jobs,
                  std::optional<int> cutoff, std::optional<int> budget, bool stable) {
    wirt::BatchOptions opts;
    opts.jobs = jobs;
    opts.cutoff_k = cutoff;
    opts.budget_ms = budget;
    opts.stable_timings = stable;
    const auto records = wirt::run_batch(input, opts);

    std::string base = output;
    if (base.size() > 4 && base.substr(base.size() - 4) == ".csv")
        base = base.substr(0, base.size() - 4);
    wirt::write_text_file(base + ".csv", wirt::records_to_csv_text(records, stable));
    wirt::write_text_file(base + ".json", wirt::records_to_json_text(records, stable));

    int mismatches = 0, skipped = 0;
    for (const auto& rec : records) {
        mismatches += rec.status == wirt::RecordStatus::Mismatch;
        skipped += rec.status == wirt::RecordStatus::Skipped;
    }
    std::cout << records.size() << " rows, " << mismatches << " mismatches, " << skipped
              << " skipped\n"
              << "wrote " << base << ".csv and " << base << ".json\n";
    return mismatches > 0 ? 2 : 0;
}

int run_compare(const std::string& results_path, const std::string& known_path) {
    auto records = wirt::read_results_csv(results_path);
    const auto report = wirt::compare_known(records, known_path);
    std::cout << "match: " << report.match << "\n"
              << "upper_bound_only: " << report.upper_bound_only << "\n"
              << "mismatch: " << report.mismatch << "\n"
              << "skipped: " << report.skipped << "\n";
    for (const auto& name : report.mismatches)
        std::cout << "MISMATCH: " << name << "\n";
    return report.failed() ? 2 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wirtinger numbers, coloring verification and bridge-number bounds "
                 "for knot and link diagrams"};
    app.require_subcommand(1);

    std::string gauss, seeds, input, output, results, known;
    bool as_json = false, stable = false;
    int jobs = 1;
    std::optional<int> cutoff, budget;

    auto* compute = app.add_subcommand("compute", "Compute omega(D) for one Gauss code");
    compute->add_option("--gauss", gauss, "Gauss code, e.g. \"[-1,3,-2,1,-3,2]\"")->required();
    compute->add_flag("--json", as_json, "emit the full record as JSON");

    auto* verify = app.add_subcommand("verify", "Color from given seeds and check the properties");
    verify->add_option("--gauss", gauss)->required();
    verify->add_option("--seeds", seeds, "comma-separated strand names, e.g. a,b")->required();

    auto* bounds = app.add_subcommand("bounds", "Twist regions, the 2t bound and volume bound");
    bounds->add_option("--gauss", gauss)->required();

    auto* batch = app.add_subcommand("batch", "Tabulate a CSV of diagrams");
    batch->add_option("--input", input, "input CSV (name,gauss,known_bridge?,known_volume?,alternating?)")
        ->required();
    batch->add_option("--output", output, "output path; writes <base>.csv and <base>.json")
        ->required();
    batch->add_option("--jobs", jobs, "worker count");
    batch->add_option("--cutoff-k", cutoff, "give up above this seed-set size");
    batch->add_option("--budget-ms", budget, "per-diagram time budget");
    batch->add_flag("--stable", stable, "write zero timings for reproducible files");

    auto* compare = app.add_subcommand("compare", "Compare results against known bridge numbers");
    compare->add_option("--results", results, "results CSV from batch")->required();
    compare->add_option("--known", known, "CSV mapping name to bridge number")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(compute))
            return run_compute(gauss, as_json);
        if (app.got_subcommand(verify))
            return run_verify(gauss, seeds);
        if (app.got_subcommand(bounds))
            return run_bounds(gauss);
        if (app.got_subcommand(batch))
            return run_batch_cmd(input, output, jobs, cutoff, budget, stable);
        if (app.got_subcommand(compare))
            return run_compare(results, known);
    } catch (const wirt::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
