#include <doctest.h>

#include <random>

#include "depthlab/field.hpp"

using namespace depthlab;

static FieldElem frac(const Field& f, long n, long d) {
  return fe::div(fe::fromInt(f, n), fe::fromInt(f, d));
}

TEST_CASE("rational arithmetic: 1/2 + 1/3 = 5/6") {
  Field Q = Field::Q();
  FieldElem r = fe::add(frac(Q, 1, 2), frac(Q, 1, 3));
  CHECK(fe::eq(r, frac(Q, 5, 6)));
  CHECK(fe::show(r, "t") == "5/6");
}

TEST_CASE("prime field: 3*4 = 2 in F_5") {
  Field F5 = Field::Fp(5);
  CHECK(fe::eq(fe::mul(fe::fromInt(F5, 3), fe::fromInt(F5, 4)), fe::fromInt(F5, 2)));
}

TEST_CASE("function field char 2: (t+1)+(t+1) = 0") {
  Field F2t = Field::Fpt(2);
  FieldElem t1 = fe::add(fe::indeterminate(F2t), fe::one(F2t));
  CHECK(fe::add(t1, t1).isZero());
}

TEST_CASE("function field normalization: (t^2-1)/(t-1) = t+1") {
  Field Qt = Field::Qt();
  FieldElem t = fe::indeterminate(Qt);
  FieldElem a = fe::sub(fe::mul(t, t), fe::one(Qt));
  FieldElem b = fe::sub(t, fe::one(Qt));
  FieldElem q = fe::div(a, b);
  CHECK(fe::eq(q, fe::add(t, fe::one(Qt))));
  // canonical: denominator is monic 1
  CHECK(q.den.size() == 1);
  CHECK(q.den[0].isOne());
}

TEST_CASE("errors: mismatch and division by zero") {
  CHECK_THROWS_AS(fe::add(fe::one(Field::Q()), fe::one(Field::Fp(5))), FieldMismatch);
  CHECK_THROWS_AS(fe::inv(fe::zero(Field::Q())), DivisionByZero);
  CHECK_THROWS_AS(fe::div(fe::one(Field::Fp(7)), fe::zero(Field::Fp(7))), DivisionByZero);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<long> d(-20, 20);
  for (Field f : {Field::Q(), Field::Fp(32003), Field::Qt(), Field::Fpt(32003)}) {
    auto rnd = [&]() {
      if (f.kind == FieldKind::FunctionField) {
        FieldElem t = fe::indeterminate(f);
        FieldElem num = fe::add(fe::mul(t, fe::fromInt(f, d(rng))), fe::fromInt(f, d(rng)));
        FieldElem den = fe::add(t, fe::fromInt(f, (d(rng) % 5) + 7));
        return fe::div(num, den);
      }
      return frac(f, d(rng), 1 + std::abs(d(rng)));
    };
    for (int i = 0; i < 25; ++i) {
      FieldElem a = rnd(), b = rnd(), c = rnd();
      CHECK(fe::eq(fe::add(a, fe::zero(f)), a));
      CHECK(fe::eq(fe::mul(a, fe::one(f)), a));
      if (!a.isZero()) CHECK(fe::mul(a, fe::inv(a)).isOne());
      CHECK(fe::eq(fe::add(fe::add(a, b), c), fe::add(a, fe::add(b, c))));
      CHECK(fe::eq(fe::mul(fe::mul(a, b), c), fe::mul(a, fe::mul(b, c))));
      CHECK(fe::eq(fe::mul(a, fe::add(b, c)), fe::add(fe::mul(a, b), fe::mul(a, c))));
      CHECK(fe::eq(fe::sub(a, b), fe::neg(fe::sub(b, a))));
      // total order sanity
      CHECK(fe::cmp(a, a) == 0);
      if (!fe::eq(a, b)) CHECK(fe::cmp(a, b) == -fe::cmp(b, a));
    }
  }
}

TEST_CASE("canonical form idempotence for function fields") {
  Field f = Field::Fpt(5);
  FieldElem t = fe::indeterminate(f);
  // (2t^2+2t) / (2t) should normalize to t+1 over 1
  FieldElem two = fe::fromInt(f, 2);
  FieldElem num = fe::mul(two, fe::add(fe::mul(t, t), t));
  FieldElem den = fe::mul(two, t);
  FieldElem q = fe::div(num, den);
  CHECK(fe::eq(q, fe::add(t, fe::one(f))));
  CHECK(q.den.size() == 1);
  CHECK(q.den[0].isOne());
}
