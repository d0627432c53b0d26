#include "kodual/sweep.hpp"

#include <doctest.h>

#include <json.hpp>

#include <atomic>

using namespace kodual;

TEST_CASE("registry") {
    const auto& reg = sweep_registry();
    CHECK(reg.size() == 15);
    for (const char* id : {"bifounded", "key-lemma", "raney-char", "corr-distributivity", "esakia", "wilker-1", "wilker-2",
                           "hofmis", "meets-joins", "bijcorr-roundtrip", "main-functoriality", "degroot-involution",
                           "frame-pipeline", "fca-roundtrip", "morphism-preservation"})
        CHECK(find_sweep(id).has_value());
    CHECK_FALSE(find_sweep("nope").has_value());
    try {
        run_sweep("nope", {});
        FAIL("unknown id accepted");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("bifounded") != std::string::npos);
    }
}

TEST_CASE("bounds are validated") {
    CHECK_THROWS_AS(run_sweep("key-lemma", {0, "x", 1, true}), Error);
    CHECK_THROWS_AS(run_sweep("bifounded", {0, "3", 1, true}), Error);
    CHECK_THROWS_AS(run_sweep("key-lemma", {0, "3x3", 1, true}), Error);
    const auto small = run_sweep("key-lemma", {0, "4", 1, true});
    CHECK(small.bound == "4");
    CHECK(small.ok());
    CHECK(small.total < run_sweep("key-lemma", {}).total);
}

TEST_CASE("every sweep passes at its default bound") {
    for (const auto& info : sweep_registry()) {
        CAPTURE(info.id);
        const auto r = run_sweep(info.id, {0, "", 2, true});
        CHECK(r.bound == info.default_bound);
        CHECK(r.total > 0);
        CHECK(r.passed == r.total);
        CHECK_MESSAGE(r.ok(), render_text(r));
    }
}

TEST_CASE("reports do not depend on the number of workers") {
    for (const char* id : {"bifounded", "esakia", "main-functoriality"}) {
        const auto one = render_json(run_sweep(id, {3, "", 1, true}));
        const auto many = render_json(run_sweep(id, {3, "", 4, true}));
        CHECK(one == many);
    }
}

TEST_CASE("json report shape") {
    const auto j = nlohmann::json::parse(render_json(run_sweep("key-lemma", {})));
    CHECK(j["kind"] == "sweep-report");
    CHECK(j["id"] == "key-lemma");
    CHECK(j["total"].get<std::size_t>() == j["passed"].get<std::size_t>());
    CHECK(render_text(run_sweep("key-lemma", {})).find("key-lemma") != std::string::npos);
}

TEST_CASE("task runner") {
    std::vector<SweepTask> tasks;
    std::atomic<int> calls{0};
    for (int i = 9; i >= 0; --i)
        tasks.push_back({"t" + std::to_string(i), [i, &calls] {
                             ++calls;
                             InstanceOutcome o;
                             o.name = "t" + std::to_string(i);
                             o.pass = i % 3 != 0;
                             o.tallies = {{"seen", 1}};
                             return o;
                         },
                         nullptr});
    const auto out = run_tasks(tasks, 3);
    REQUIRE(out.size() == 10);
    CHECK(calls == 10);
    for (std::size_t i = 1; i < out.size(); ++i) CHECK(out[i - 1].name < out[i].name);
    CHECK(std::count_if(out.begin(), out.end(), [](const auto& o) { return !o.pass; }) == 4);

    // Exceptions inside a task do not escape the runner.
    std::vector<SweepTask> throwing{{"boom", [] () -> InstanceOutcome { throw Error("bad"); }, nullptr}};
    const auto failed = run_tasks(throwing, 2);
    REQUIRE(failed.size() == 1);
    CHECK_FALSE(failed[0].pass);
    CHECK(failed[0].detail.find("bad") != std::string::npos);
}
