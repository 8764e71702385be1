#include "doctest.h"

#include <atomic>
#include <sstream>
#include <thread>
#include <vector>

#include "ctxrbi/errors.hpp"
#include "ctxrbi/we_table.hpp"
#include "support.hpp"

using namespace ctxrbi;

namespace {

const std::string kHeader{kWeTableHeader};

ErrorKind parse_kind(const std::string& body, std::size_t* line = nullptr) {
    std::istringstream in(kHeader + "\n" + body);
    try {
        parse_we_table(in);
    } catch (const Error& e) {
        if (line) *line = e.line();
        return e.kind();
    }
    FAIL("parse succeeded");
    return ErrorKind::IoError;
}

StateKey b1(Bases bases) { return StateKey{1, Half::Bottom, 0, bases}; }

}  // namespace

TEST_CASE("Sample rows load into knots") {
    const WeTable table = load_we_table(test::data_dir() / "we_sample_rows.csv");
    REQUIRE(table.size() == 2);
    const auto* empty = table.find(b1(Bases{}));
    REQUIRE(empty != nullptr);
    REQUIRE(empty->size() == 11);
    CHECK(empty->front().x == -5.0);
    CHECK(empty->front().y == 0.128);
    CHECK(empty->back().y == 0.914);
    const auto* first = table.find(b1(Bases{true, false, false}));
    REQUIRE(first != nullptr);
    CHECK((*first)[5].y == 0.583);
}

TEST_CASE("parse errors carry kind and line") {
    std::size_t line = 0;
    CHECK(parse_kind("1,Bottom,0,Empty,0.1,0.2\n", &line) == ErrorKind::MalformedRow);
    CHECK(line == 2);

    const std::string ok = "1,Bottom,0,Empty,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,0.95,0.99\n";
    CHECK(parse_kind(ok + "1,Bottom,0,Empty,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,0.95,0.99\n", &line) ==
          ErrorKind::DuplicateState);
    CHECK(line == 3);
    CHECK(parse_kind("1,Bottom,0,Empty,0.1,0.2,0.3,0.4,0.5,0.45,0.7,0.8,0.9,0.95,0.99\n", &line) ==
          ErrorKind::NonMonotoneRow);
    CHECK(line == 2);
    CHECK(parse_kind("1,Bottom,0,Empty,0.1,0.2,0.3,0.4,0.5,x,0.7,0.8,0.9,0.95,0.99\n") == ErrorKind::MalformedRow);
    CHECK(parse_kind("1,Middle,0,Empty,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,0.95,0.99\n") == ErrorKind::MalformedRow);
    CHECK(parse_kind("1,Bottom,0,Empty,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,0.95,1.2\n") != ErrorKind::DuplicateState);

    std::istringstream bad_header("inning,half\n");
    CHECK_THROWS_AS(parse_we_table(bad_header), Error);
    CHECK_THROWS_AS(load_we_table(test::data_dir() / "does_not_exist.csv"), Error);
}

TEST_CASE("lookup_we returns table cells exactly and extends beyond them") {
    WeModel model(load_we_table(test::data_dir() / "we_sample_rows.csv"));
    CHECK(lookup_we(model, b1(Bases{}), 0) == 0.547);
    CHECK(lookup_we(model, b1(Bases{true, false, false}), -5) == 0.153);

    const double at6 = lookup_we(model, b1(Bases{}), 6);
    CHECK(at6 > 0.914);
    CHECK(at6 < 1.0);
    const double atm6 = lookup_we(model, b1(Bases{}), -6);
    CHECK(atm6 < 0.128);
    CHECK(atm6 > 0.0);

    try {
        lookup_we(model, StateKey{4, Half::Top, 2, Bases{}}, 0);
        FAIL("expected UnknownState");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownState);
    }
}

TEST_CASE("WeModel serves concurrent readers") {
    WeModel model(load_we_table(test::data_dir() / "we_synthetic.csv"));
    std::vector<StateKey> keys;
    for (const auto& [key, knots] : model.table().entries()) keys.push_back(key);

    std::vector<double> expected;
    {
        WeModel serial(load_we_table(test::data_dir() / "we_synthetic.csv"));
        for (const auto& key : keys) expected.push_back(serial.lookup(key, 7.25));
    }

    std::atomic<int> mismatches{0};
    std::vector<std::thread> threads;
    for (int t = 0; t < 8; ++t) {
        threads.emplace_back([&, t] {
            for (std::size_t i = 0; i < keys.size(); ++i) {
                const std::size_t j = (i * 7 + static_cast<std::size_t>(t) * 13) % keys.size();
                if (model.lookup(keys[j], 7.25) != expected[j]) ++mismatches;
            }
        });
    }
    for (auto& th : threads) th.join();
    CHECK(mismatches.load() == 0);
}
