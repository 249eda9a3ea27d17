#include <doctest.h>

#include <random>

#include "swz/rat.hpp"

using swz::Rat;

namespace {

Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-50, 50);
    std::uniform_int_distribution<long long> den(1, 20);
    return Rat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rat canonicalization") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(6, 3).is_integer());
    CHECK(Rat(6, 3).to_string() == "2");
    CHECK(Rat(-7, 3).to_string() == "-7/3");
    // normalizing twice equals normalizing once
    Rat a(36, -48);
    Rat b(a.num(), a.den());
    CHECK(a == b);
}

TEST_CASE("rat field axioms on random triples") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 1000; ++iter) {
        Rat a = random_rat(rng), b = random_rat(rng), c = random_rat(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == Rat(1));
    }
}

TEST_CASE("rat ordering and floor/ceil") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 3) > Rat(-1, 2));
    CHECK(Rat(7, 2).floor() == swz::BigInt(3));
    CHECK(Rat(7, 2).ceil() == swz::BigInt(4));
    CHECK(Rat(-7, 2).floor() == swz::BigInt(-4));
    CHECK(Rat(-7, 2).ceil() == swz::BigInt(-3));
    CHECK(Rat(4).floor() == swz::BigInt(4));
}

TEST_CASE("rat pow and sqrt") {
    CHECK(Rat(2, 3).pow(3) == Rat(8, 27));
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
    CHECK(Rat(4).sqrt_exact().value() == Rat(2));
    CHECK(Rat(9, 16).sqrt_exact().value() == Rat(3, 4));
    CHECK(!Rat(2).sqrt_exact().has_value());
    CHECK(!Rat(-4).sqrt_exact().has_value());
}

TEST_CASE("rat string parsing") {
    CHECK(Rat::from_string("3/4") == Rat(3, 4));
    CHECK(Rat::from_string("-3/4") == Rat(-3, 4));
    CHECK(Rat::from_string("12") == Rat(12));
}
