#include <gtest/gtest.h>

#include <random>

#include "prf_corpus.hpp"
#include "support.hpp"

using namespace testing_support;
using namespace corechor::enc;
using corechor::prf::Function;
using corechor::prf::Nat;
namespace lib = corechor::prf::lib;
namespace chor = corechor::chor;

namespace {

Config start(const Prog& prog, const std::vector<corechor::Pid>& ps, const std::vector<Nat>& xs) {
  return Config{prog, input_state(ps, xs)};
}

C tcall(corechor::ProcName x) { return testing_support::call(x); }

Config at(const C& main, const State& s) { return Config{program({}, main), s}; }

State random_state(std::mt19937_64& rng, corechor::Pid processes) {
  State s(0);
  for (corechor::Pid p = 0; p < processes; ++p) {
    s = s.update(p, Var::xx, rng() % 6);
    s = s.update(p, Var::yy, rng() % 6);
  }
  return s;
}

}  // namespace

TEST(Macros, Send) {
  EXPECT_EQ(send_macro(1, Expr::zero, 0), (chor::Eta<P>{chor::Com<P>{1, Expr::zero, 0, Var::xx}}));
  EXPECT_THROW(send_macro(1, Expr::this_value, 1), corechor::SelfCommunication);
  auto r = chor::run(at(send(3, Expr::succ_this, 0, C{}), State(0).update(3, Var::xx, 4)), 10, chor::Scheduler::first());
  EXPECT_EQ(r.last.state(0, Var::xx), 5u);
}

TEST(Macros, IfEq) {
  auto c1 = com(5, Expr::zero, 6, Var::xx);
  auto c2 = com(6, Expr::zero, 5, Var::xx);
  EXPECT_EQ(ifeq_macro(1, 2, C{}, C{}), com(2, Expr::this_value, 1, Var::yy, cond(1, C{}, C{})));
  EXPECT_THROW(ifeq_macro(2, 2, C{}, C{}), corechor::SelfCommunication);

  auto equal = State(0).update(1, Var::xx, 3).update(2, Var::xx, 3);
  auto c = at(ifeq_macro(1, 2, c1, c2), equal);
  c = chor::step(c, rcom(2, 3, 1, Var::yy));
  c = chor::step(c, rcond(1));
  EXPECT_EQ(c.program.main, c1);
  EXPECT_EQ(c.state(1, Var::yy), 3u);

  auto differ = State(0).update(1, Var::xx, 2).update(2, Var::xx, 3);
  c = at(ifeq_macro(1, 2, c1, c2), differ);
  c = chor::step(c, rcom(2, 3, 1, Var::yy));
  c = chor::step(c, rcond(1));
  EXPECT_EQ(c.program.main, c2);
  EXPECT_EQ(c.state, differ.update(1, Var::yy, 3));
}

TEST(Macros, IfZero) {
  auto s = State(0).update(1, Var::xx, 0).update(1, Var::yy, 4).update(2, Var::xx, 9);
  auto r = chor::run(at(ifzero_macro(1, 2, com(1, Expr::zero, 3, Var::xx), C{}), s), 10, chor::Scheduler::first());
  EXPECT_EQ(r.trace.size(), 3u);
  EXPECT_EQ(r.last.state(1, Var::yy), 0u);
  auto pos = s.update(1, Var::xx, 2);
  r = chor::run(at(ifzero_macro(1, 2, com(1, Expr::zero, 3, Var::xx), C{}), pos), 10, chor::Scheduler::first());
  EXPECT_EQ(r.trace.size(), 2u);
}

TEST(Resources, PiGammaExamples) {
  EXPECT_EQ(gamma(Function::zero()), 1u);
  EXPECT_EQ(pi(Function::zero()), 0u);
  auto h = Function::compose(lib::add(), {lib::proj(0, 3), lib::proj(2, 3)});
  auto r = Function::recursion(lib::add(), Function::compose(lib::mul(), {lib::proj(0, 4), lib::proj(3, 4)}));
  EXPECT_EQ(gamma(r), 3 + gamma(lib::add()) + gamma(Function::compose(lib::mul(), {lib::proj(0, 4), lib::proj(3, 4)})));
  EXPECT_EQ(pi(lib::add()), 4u);
  EXPECT_EQ(gamma(lib::add()), 7u);
  EXPECT_EQ(pi(Function::minimization(h)), 2 + pi(h));
  EXPECT_EQ(gamma(Function::minimization(h)), 2 + gamma(h));
}

TEST(EncodingRec, ZeroBlock) {
  EncodingContext ctx{{1}, 0, 2, 0};
  EXPECT_EQ(encoding_rec(Function::zero(), ctx, 0), com(1, Expr::zero, 0, Var::xx, tcall(1)));
  EXPECT_EQ(encoding_rec(Function::successor(), ctx, 0), com(1, Expr::succ_this, 0, Var::xx, tcall(1)));
  EncodingContext three{{4, 5, 6}, 0, 7, 3};
  EXPECT_EQ(encoding_rec(Function::projection(2, 3), three, 3), com(6, Expr::this_value, 0, Var::xx, tcall(4)));
  EXPECT_THROW(encoding_rec(Function::zero(), ctx, 1), std::out_of_range);
}

TEST(EncodingRec, RecursionDelegatesToG) {
  auto g = lib::mul();
  auto h = Function::compose(lib::add(), {lib::proj(1, 4), lib::proj(2, 4)});
  auto r = Function::recursion(g, h);
  EncodingContext ctx{{1, 2, 3}, 0, 4, 2};
  EncodingContext g_ctx{{2, 3}, 4, 7, 2};
  for (corechor::ProcName y = 2; y < 2 + gamma(g); ++y) EXPECT_EQ(encoding_rec(r, ctx, y), encoding_rec(g, g_ctx, y));
  EXPECT_THROW(encoding_rec(r, ctx, 2 + gamma(r)), std::out_of_range);
}

TEST(Encode, ZeroExactStructure) {
  auto prog = encode(Function::zero(), {1}, 0);
  Defs expected;
  expected.define(0, {{0, 1}, com(1, Expr::zero, 0, Var::xx, tcall(1))});
  expected.define(1, {{0}, C{}});
  EXPECT_EQ(prog.procedures, expected);
  EXPECT_EQ(prog.main, tcall(0));
  for (Nat k = 0; k < 4; ++k) {
    auto r = chor::run(start(prog, {1}, {k}), 100, chor::Scheduler::first());
    EXPECT_EQ(r.status, chor::RunStatus::terminated);
    EXPECT_EQ(r.last.state(0, Var::xx), *corechor::prf::eval(Function::zero(), 0, {k}));
  }
}

TEST(Encode, Errors) {
  EXPECT_THROW(encode(Function::zero(), {1}, 1), std::invalid_argument);
  EXPECT_THROW(encode(lib::add(), {1, 1}, 0), std::invalid_argument);
  EXPECT_THROW(encode(lib::add(), {1}, 0), corechor::ArityMismatch);
}

TEST(Encode, DefaultLayout) {
  auto prog = encode_default(Function::successor());
  EXPECT_EQ(prog.procedures(0).body, com(1, Expr::succ_this, 0, Var::xx, tcall(1)));
  auto nullary = Function::minimization(Function::compose(lib::sub(), {lib::constant(2, 1), lib::proj(0, 1)}));
  auto r = chor::run(Config{encode_default(nullary), State(0)}, 100000, chor::Scheduler::first());
  EXPECT_EQ(r.status, chor::RunStatus::terminated);
  EXPECT_EQ(r.last.state(0, Var::xx), 2u);
  auto sum = chor::run(start(encode_default(lib::add()), {1, 2}, {2, 3}), 100000, chor::Scheduler::first());
  EXPECT_EQ(sum.last.state(0, Var::xx), 5u);
}

TEST(BlockReduction, ZeroReachesExitInOneStep) {
  std::mt19937_64 rng(1);
  EncodingContext ctx{{1}, 0, 2, 0};
  auto body = encoding_rec(Function::zero(), ctx, 0);
  for (int i = 0; i < 50; ++i) {
    auto s = random_state(rng, 3);
    auto next = chor::step(at(body, s), rcom(1, 0, 0, Var::xx));
    EXPECT_EQ(next.program.main, tcall(1));
    EXPECT_EQ(next.state(0, Var::xx), 0u);
  }
}

TEST(BlockReduction, RecursionInitAndTest) {
  // R(g, h) with ps = (1, 2), q = 0, n = 3, X = 0.
  auto g = Function::projection(0, 1);
  auto h = Function::compose(Function::successor(), {lib::proj(1, 3)});
  auto r = Function::recursion(g, h);
  EncodingContext ctx{{1, 2}, 0, 3, 0};
  const corechor::ProcName init = gamma(g);
  const corechor::ProcName test = init + 1;
  const corechor::ProcName h_entry = init + 2;
  const corechor::ProcName exit = gamma(r);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    auto s = random_state(rng, 7);
    auto zeroed = chor::step(at(encoding_rec(r, ctx, init), s), rcom(5, 0, 4, Var::xx));
    EXPECT_EQ(zeroed.state(4, Var::xx), 0u);
    EXPECT_EQ(zeroed.program.main, tcall(test));

    auto tested = chor::step(at(encoding_rec(r, ctx, test), s), rcom(1, s(1, Var::xx), 4, Var::yy));
    tested = chor::step(tested, rcond(4));
    EXPECT_EQ(tested.state, s.update(4, Var::yy, s(1, Var::xx)));
    if (s(4, Var::xx) == s(1, Var::xx)) {
      EXPECT_EQ(tested.program.main, com(3, Expr::this_value, 0, Var::xx, tcall(exit)));
    } else {
      EXPECT_EQ(tested.program.main, tcall(h_entry));
    }
  }
}

TEST(BlockReduction, MinimisationTestRoutesOnZero) {
  auto h = Function::compose(lib::sub(), {lib::proj(0, 2), lib::proj(1, 2)});
  auto m = Function::minimization(h);
  EncodingContext ctx{{1}, 0, 2, 0};
  const corechor::ProcName test = 1 + gamma(h);
  auto body = encoding_rec(m, ctx, test);
  auto zero = State(0).update(2, Var::xx, 4).update(3, Var::xx, 0);
  auto r = chor::run(at(body, zero), 20, chor::Scheduler::first());
  EXPECT_EQ(r.last.state(0, Var::xx), 4u);
  auto pos = zero.update(3, Var::xx, 2);
  r = chor::run(at(body, pos), 20, chor::Scheduler::first());
  EXPECT_EQ(r.last.state(2, Var::xx), 5u);
  EXPECT_EQ(r.last.state(0, Var::xx), 0u);
  EXPECT_EQ(r.last.program.main, tcall(1));
}

TEST(Resources, StaticScanOnLibraryAndRandomFunctions) {
  std::vector<Function> fs;
  for (auto& [name, f] : corechor::prf::standard_library()) fs.push_back(f);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) fs.push_back(prf_corpus::random_function(rng, 1 + rng() % 3, 3, true));
  for (const auto& f : fs) {
    std::vector<corechor::Pid> ps;
    for (std::size_t i = 0; i < f.arity(); ++i) ps.push_back(10 + i);
    EncodingContext ctx{ps, 2, 20, 7};
    auto v = resource_violations(f, ctx);
    EXPECT_TRUE(v.empty()) << corechor::prf::to_string(f) << ": " << v.front();
  }
}

TEST(Resources, AddUsesItsWholeScratchRange) {
  auto f = lib::add();
  EncodingContext ctx{{1, 2}, 0, 3, 0};
  BlockBodies bodies;
  emit_block(f, ctx, bodies);
  chor::PidSet<P> used;
  for (auto& [y, body] : bodies) chor::direct_processes(body, used);
  EXPECT_EQ(*used.rbegin(), 3 + pi(f) - 1);
}

TEST(EncodingWf, LibraryAndRandomFunctions) {
  std::vector<Function> fs;
  for (auto& [name, f] : corechor::prf::standard_library()) fs.push_back(f);
  std::mt19937_64 rng(6);
  for (int i = 0; i < 100; ++i) fs.push_back(prf_corpus::random_function(rng, 1 + rng() % 3, 3, true));
  for (const auto& f : fs) {
    EXPECT_TRUE(chor::ccp_wf(encode_default(f))) << corechor::prf::to_string(f);
    std::vector<corechor::Pid> ps;
    for (std::size_t i = 0; i < f.arity(); ++i) ps.push_back(3 * i + 2);
    EXPECT_TRUE(chor::ccp_wf(encode(f, ps, 1))) << corechor::prf::to_string(f);
  }
}

TEST(SchedulerIndependence, FinalStatesAgree) {
  for (const auto& name : {"add", "mul", "sub", "eq"}) {
    auto f = corechor::prf::standard_library().at(name);
    auto prog = encode_default(f);
    for (Nat a = 0; a <= 2; ++a) {
      for (Nat b = 0; b <= 2; ++b) {
        auto base = chor::run(start(prog, {1, 2}, {a, b}), 100000, chor::Scheduler::first());
        ASSERT_EQ(base.status, chor::RunStatus::terminated);
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
          auto other = chor::run(start(prog, {1, 2}, {a, b}), 100000, chor::Scheduler::random(seed));
          ASSERT_EQ(other.status, chor::RunStatus::terminated);
          EXPECT_TRUE(chor::states_ext_equal(base.last.state, other.last.state)) << name;
        }
      }
    }
  }
}

TEST(Implements, AddOnGrid) {
  auto f = lib::add();
  auto report = check_implements(encode_default(f), f, {1, 2}, 0, input_grid(2, 5), 100000, {1, 2, 3});
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(report.verdicts.size(), 36u);
  for (const auto& v : report.verdicts) {
    ASSERT_EQ(v.runs.size(), 4u);
    for (const auto& run : v.runs) EXPECT_EQ(run.output, v.input[0] + v.input[1]);
  }
}

TEST(Implements, DivergentFunction) {
  auto f = Function::minimization(Function::compose(Function::successor(), {lib::proj(0, 1)}));
  auto report = check_implements(encode_default(f), f, {}, 0, {{}}, 10000, {1, 2, 3});
  EXPECT_TRUE(report.pass);
  for (const auto& run : report.verdicts.at(0).runs) EXPECT_EQ(run.status, chor::RunStatus::out_of_fuel);
}

TEST(Implements, PartialFunctionOnMixedInputs) {
  // Defined (as 0) only at 0.
  auto f = Function::minimization(lib::proj(0, 2));
  auto report = check_implements(encode_default(f), f, {1}, 0, input_grid(1, 3), 20000, {1});
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(report.verdicts[0].expected, Nat{0});
  EXPECT_FALSE(report.verdicts[1].expected.has_value());
  for (const auto& run : report.verdicts[2].runs) EXPECT_EQ(run.status, chor::RunStatus::out_of_fuel);
}

TEST(Implements, TerminatedProgramComputesNothing) {
  auto f = Function::compose(Function::successor(), {lib::proj(0, 1)});
  auto report = check_implements(program({}, C{}), f, {1}, 0, input_grid(1, 2), 100, {});
  EXPECT_FALSE(report.pass);
}

TEST(Implements, WrongProgramFails) {
  auto report = check_implements(encode_default(lib::add()), lib::mul(), {1, 2}, 0, input_grid(2, 2), 100000, {1});
  EXPECT_FALSE(report.pass);
}

TEST(Implements, RandomTotalFunctions) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 40; ++i) {
    auto f = prf_corpus::random_function(rng, 1 + rng() % 2, 2, false);
    std::vector<corechor::Pid> ps(f.arity());
    for (std::size_t k = 0; k < ps.size(); ++k) ps[k] = k + 1;
    auto report = check_implements(encode_default(f), f, ps, 0, input_grid(f.arity(), 2), 50000, {1, 2});
    EXPECT_TRUE(report.pass) << report.function;
  }
}

TEST(Implements, JsonReport) {
  auto f = Function::successor();
  auto j = to_json(check_implements(encode_default(f), f, {1}, 0, {{4}}, 100, {7}));
  EXPECT_EQ(j["function"], "S");
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["inputs"], nlohmann::json::parse("[[4]]"));
  EXPECT_EQ(j["verdicts"][0]["expected"], 5);
  EXPECT_EQ(j["verdicts"][0]["runs"][1]["scheduler"], "random:7");
  EXPECT_EQ(j["verdicts"][0]["runs"][0]["status"], "terminated");
}
