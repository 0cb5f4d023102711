#include "doctest.h"

#include "kst/json_io.hpp"

#include <thread>

using namespace kst;

namespace {

struct Rng {
    unsigned long state = 0x853c49e6748fea9bUL;
    long next(long lo, long hi) {
        state = state * 6364136223846793005UL + 1442695040888963407UL;
        return lo + static_cast<long>((state >> 33) %
                                      static_cast<unsigned long>(hi - lo + 1));
    }
};

} // namespace

TEST_CASE("AlgNum JSON encoding round-trips in every field") {
    Rng rng;
    std::vector<FieldDesc> fields = {FieldDesc::rationals(), FieldDesc::quad(6),
                                     FieldDesc::biquad(2, 3)};
    for (const auto& f : fields) {
        for (int i = 0; i < 50; ++i) {
            std::vector<Rational> c;
            for (std::size_t k = 0; k < f.dim(); ++k)
                c.push_back(rational_of(rng.next(-20, 20), rng.next(1, 9)));
            AlgNum x(f, std::move(c));
            AlgNum back = algnum_from_json(algnum_to_json(x));
            CHECK(back == x);
            CHECK(back.field() == x.field());
        }
    }
}

TEST_CASE("model JSON round-trips through the documented schema") {
    for (auto kind : {CubicCase::tacnode, CubicCase::cusp, CubicCase::node}) {
        auto m = cubic_model(CubicCase::of(kind));
        Json j = model_to_json(m);
        auto back = model_from_json(j);
        CHECK(back.lattice.classes() == m.lattice.classes());
        CHECK(back.log_discrepancy == m.log_discrepancy);
        CHECK(refinement_summary(back).s_value == refinement_summary(m).s_value);
    }
    auto lc = cubic_model(CubicCase::with_weights(3, 2));
    auto back = model_from_json(model_to_json(lc));
    CHECK(s_invariant(back) == s_invariant(lc));
}

TEST_CASE("declared field must cover the Gram entries") {
    Json j = lattice_to_json(cubic_model(CubicCase::of(CubicCase::tacnode)).lattice);
    j["gram"][0][0] = algnum_to_json(AlgNum::quad(7, Rational(3), Rational(1)));
    CHECK_THROWS(lattice_from_json(j));
}

TEST_CASE("library calls are safe from concurrent threads") {
    std::vector<AlgNum> results(4, AlgNum(0L));
    std::vector<std::thread> workers;
    for (int i = 0; i < 4; ++i)
        workers.emplace_back([&results, i] {
            auto c = i % 2 == 0 ? CubicCase::of(CubicCase::tacnode)
                                : CubicCase::with_weights(2, 1);
            results[static_cast<std::size_t>(i)] = cubic_delta(c);
        });
    for (auto& w : workers) w.join();
    CHECK(results[0] == results[2]);
    CHECK(results[1] == results[3]);
    CHECK(results[0] == AlgNum::of(27, 17));
}
