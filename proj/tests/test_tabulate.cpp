#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "wirt/tabulate.hpp"

using namespace wirt;

namespace {

struct TempFile {
    std::filesystem::path path;

    TempFile(const std::string& name, const std::string& content) {
        path = std::filesystem::temp_directory_path() / name;
        std::ofstream out(path, std::ios::binary);
        out << content;
    }
    ~TempFile() { std::error_code ec; std::filesystem::remove(path, ec); }
};

const std::string kSmallFixture =
    "name,gauss,known_bridge,known_volume,alternating\n"
    "3_1,\"[-1,3,-2,1,-3,2]\",2,,1\n"
    "4_1,\"[1,-2,3,-4,2,-1,4,-3]\",2,2.029883212819307,1\n"
    "bad,\"[-1,2,-2]\",,,\n"
    "kink,\"[1,-1]\",1,,\n";

} // namespace

TEST_CASE("csv quoting round-trips") {
    const std::vector<std::string> row{"a,b", "plain", "say \"hi\"", "multi\nline"};
    const auto parsed = csv::parse(csv::join_row(row));
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0] == row);
}

TEST_CASE("run_batch computes records and never aborts on a bad row") {
    TempFile input("wirt_batch_in.csv", kSmallFixture);
    BatchOptions opts;
    const auto records = run_batch(input.path.string(), opts);
    REQUIRE(records.size() == 4);

    CHECK(records[0].name == "3_1");
    CHECK(records[0].omega == 2);
    CHECK(records[0].status == RecordStatus::Match);
    CHECK(records[0].witness == std::vector<std::string>{"a", "b"});
    CHECK(records[0].twist_number == 1);
    CHECK(records[0].bound_2t == 2);
    CHECK(records[0].checks.all_ok());
    CHECK(records[0].checks.maxima == 2);

    CHECK(records[1].omega == 2);
    CHECK(records[1].status == RecordStatus::Match);
    CHECK(records[1].twist_number == 2);

    CHECK(records[2].status == RecordStatus::Skipped);
    CHECK(records[2].diagnostic.find("unbalanced") != std::string::npos);

    CHECK(records[3].omega == 1);
    CHECK(records[3].status == RecordStatus::Match);
}

TEST_CASE("batch outputs are identical across worker counts") {
    TempFile input("wirt_batch_det.csv", kSmallFixture);
    BatchOptions seq;
    seq.stable_timings = true;
    BatchOptions par = seq;
    par.jobs = 4;
    const auto a = run_batch(input.path.string(), seq);
    const auto b = run_batch(input.path.string(), par);
    CHECK(records_to_csv_text(a, true) == records_to_csv_text(b, true));
    CHECK(records_to_json_text(a, true) == records_to_json_text(b, true));
}

TEST_CASE("a corrupted known bridge number raises MISMATCH") {
    TempFile input("wirt_batch_bad_known.csv",
                   "name,gauss,known_bridge\n"
                   "3_1,\"[-1,3,-2,1,-3,2]\",1\n");
    const auto records = run_batch(input.path.string(), {});
    REQUIRE(records.size() == 1);
    CHECK(records[0].status == RecordStatus::Mismatch);
}

TEST_CASE("omega below the known bridge number is impossible and flagged") {
    TempFile input("wirt_batch_low.csv",
                   "name,gauss,known_bridge\n"
                   "3_1,\"[-1,3,-2,1,-3,2]\",3\n");
    const auto records = run_batch(input.path.string(), {});
    CHECK(records[0].status == RecordStatus::Mismatch);
}

TEST_CASE("omega above the known bridge number is only an upper bound") {
    TempFile input("wirt_batch_ub.csv",
                   "name,gauss,known_bridge\n"
                   "3_1,\"[-1,3,-2,1,-3,2]\",1\n");
    const auto records = run_batch(input.path.string(), {});
    CHECK(records[0].status == RecordStatus::UpperBoundOnly);
    CHECK(records[0].diagnostic.find("exceeds") != std::string::npos);
}

TEST_CASE("a cutoff leaves the row skipped rather than wrong") {
    TempFile input("wirt_batch_cut.csv",
                   "name,gauss,known_bridge\n"
                   "3_1,\"[-1,3,-2,1,-3,2]\",2\n");
    BatchOptions opts;
    opts.cutoff_k = 1;
    const auto records = run_batch(input.path.string(), opts);
    CHECK(records[0].status == RecordStatus::Skipped);
    CHECK(records[0].diagnostic.find("omega > 1") != std::string::npos);
    CHECK(records[0].twist_number == 1); // partial info survives
}

TEST_CASE("header validation") {
    TempFile missing("wirt_head1.csv", "name,code\n3_1,\"[1,-1]\"\n");
    CHECK_THROWS_AS(read_input_csv(missing.path.string()), MalformedHeader);
    TempFile extra("wirt_head2.csv", "name,gauss,color\n");
    CHECK_THROWS_AS(read_input_csv(extra.path.string()), MalformedHeader);
    CHECK_THROWS_AS(read_input_csv("/nonexistent/path.csv"), UnreadableInput);
}

TEST_CASE("compare_known recomputes statuses") {
    TempFile input("wirt_cmp_in.csv", kSmallFixture);
    auto records = run_batch(input.path.string(), {});

    SECTION("matching table") {
        TempFile known("wirt_cmp_known.csv", "name,known_bridge\n3_1,2\n4_1,2\nkink,1\n");
        const auto report = compare_known(records, known.path.string());
        CHECK(report.match == 3);
        CHECK(report.mismatch == 0);
        CHECK(report.skipped == 1);
        CHECK(!report.failed());
    }
    SECTION("empty table demotes everything to upper bounds") {
        TempFile known("wirt_cmp_empty.csv", "name,known_bridge\n");
        const auto report = compare_known(records, known.path.string());
        CHECK(report.match == 0);
        CHECK(report.upper_bound_only == 3);
    }
    SECTION("a corrupted value fails the comparison") {
        TempFile known("wirt_cmp_corrupt.csv", "name,known_bridge\n3_1,3\n4_1,2\n");
        const auto report = compare_known(records, known.path.string());
        CHECK(report.mismatch == 1);
        CHECK(report.failed());
        REQUIRE(report.mismatches == std::vector<std::string>{"3_1"});
    }
}

TEST_CASE("results csv round-trips through read_results_csv") {
    TempFile input("wirt_res_in.csv", kSmallFixture);
    const auto records = run_batch(input.path.string(), {});
    TempFile results("wirt_res_out.csv", records_to_csv_text(records, true));
    const auto loaded = read_results_csv(results.path.string());
    REQUIRE(loaded.size() == records.size());
    CHECK(loaded[0].name == "3_1");
    CHECK(loaded[0].omega == 2);
    CHECK(loaded[2].status == RecordStatus::Skipped);
}

TEST_CASE("json output is schema-versioned") {
    TempFile input("wirt_json_in.csv", "name,gauss\nkink,\"[1,-1]\"\n");
    const auto records = run_batch(input.path.string(), {});
    const auto doc = nlohmann::json::parse(records_to_json_text(records, true));
    CHECK(doc["schema"] == 1);
    REQUIRE(doc["records"].is_array());
    CHECK(doc["records"][0]["omega"] == 1);
    CHECK(doc["records"][0]["status"] == "MATCH");
}
