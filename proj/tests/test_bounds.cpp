#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "locc/bounds.hpp"
#include "locc/repro.hpp"
#include "test_support.hpp"

using namespace locc;
using locc::testing::basis_ket;
using locc::testing::h2;
using locc::testing::pauli;
using locc::testing::Rng;

namespace {

std::vector<Encoding> pauli_encodings() {
  return {{0.25, pauli('I')}, {0.25, pauli('X')}, {0.25, pauli('Y')}, {0.25, pauli('Z')}};
}

void check_report_consistency(const BoundReport& r) {
  const double sum = std::accumulate(r.party_entropies.begin(), r.party_entropies.end(), 0.0);
  const double max_avg = *std::max_element(r.avg_member_entropy_per_party.begin(), r.avg_member_entropy_per_party.end());
  CHECK(std::abs(r.bound_bits - (sum - max_avg)) < 1e-12);
  CHECK((r.verdict == Verdict::ProvablyIndistinguishable) == (r.bound_bits < r.chi_bits - 1e-9));
}

}  // namespace

TEST_CASE("locc bound of trivial and textbook ensembles") {
  const BoundReport trivial = locc_bound(uniform_ensemble({locc::testing::ket_state("000")}));
  CHECK(std::abs(trivial.bound_bits) < 1e-12);
  CHECK(trivial.verdict == Verdict::Inconclusive);
  check_report_consistency(trivial);

  // S(rho^A) = S(rho^B) = 1 and every member reduction is I/2.
  const BoundReport bell = locc_bound(locc::testing::bell_ensemble());
  CHECK(std::abs(bell.bound_bits - 1.0) < 1e-9);
  CHECK(std::abs(bell.chi_bits - 2.0) < 1e-9);
  CHECK(bell.verdict == Verdict::ProvablyIndistinguishable);
  check_report_consistency(bell);
}

TEST_CASE("E3 ensemble") {
  const BoundReport r = locc_bound(build_e3());
  CHECK(std::abs(r.bound_bits - 3.0) < 1e-9);
  CHECK(std::abs(r.chi_bits - std::log2(9.0)) < 1e-9);
  CHECK(r.verdict == Verdict::ProvablyIndistinguishable);
  check_report_consistency(r);
}

TEST_CASE("ties in the maximizing party resolve to the lowest index") {
  // every member reduction of E2 is diag(a^2, b^2) on every party
  const BoundReport r = locc_bound(build_e2(0.4));
  CHECK(r.argmax_party == 1);
  const BoundReport bell = locc_bound(locc::testing::bell_ensemble());
  CHECK(bell.argmax_party == 1);

  // party 2 strictly largest
  const SystemLayout layout({2, 2});
  const double c = std::cos(0.3), s = std::sin(0.3);
  const Ensemble e = uniform_ensemble({QuantumState::pure(layout, c * basis_ket(layout, "00") + s * basis_ket(layout, "11")),
                                       QuantumState::pure(layout, basis_ket(layout, "01"))});
  const BoundReport r2 = locc_bound(e);
  CHECK(r2.argmax_party == 1);  // equal member entropies on both parties
  check_report_consistency(r2);
}

TEST_CASE("bipartite bound") {
  CHECK(std::abs(bipartite_bound(locc::testing::bell_ensemble()) - 1.0) < 1e-12);
  CHECK(std::abs(bipartite_bound(uniform_ensemble({locc::testing::phi_plus()})) - 1.0) < 1e-12);
  CHECK(std::abs(bipartite_bound(uniform_ensemble({locc::testing::ket_state("00"), locc::testing::ket_state("11")})) - 2.0) < 1e-12);
  CHECK_THROWS_AS(bipartite_bound(build_e3()), ArityError);
  CHECK_THROWS_AS(bipartite_bound(uniform_ensemble({locc::testing::ket_state("0")})), ArityError);
}

TEST_CASE("pure squashed entanglement") {
  CHECK(pure_squashed_entanglement(locc::testing::ket_state("000")) == doctest::Approx(0.0));
  CHECK(std::abs(pure_squashed_entanglement(locc::testing::ghz(3)) - 3.0) < 1e-12);
  for (double a : {0.2, 0.5, 0.9}) {
    const Ensemble e1 = build_e1(a, 0.5);
    CHECK(std::abs(pure_squashed_entanglement(e1[0].state) - 3.0 * h2(a * a)) < 1e-12);
  }
  Rng rng(locc::testing::suite_seed(41));
  CHECK_THROWS_AS(pure_squashed_entanglement(locc::testing::random_mixed(SystemLayout({2, 2}), 2, rng)), PurityError);
}

TEST_CASE("complementarity relation") {
  const ComplementarityReport trivial = complementarity_check(uniform_ensemble({locc::testing::ket_state("000")}));
  CHECK(std::abs(trivial.lhs) < 1e-12);
  CHECK(trivial.capacity_D == doctest::Approx(3.0));
  CHECK(trivial.holds);

  // bound 2, E_sq = 3 per member, N = 3
  const ComplementarityReport e2 = complementarity_check(build_e2(std::sqrt(0.5)));
  CHECK(std::abs(e2.lhs - 3.0) < 1e-9);
  CHECK(e2.capacity_D == doctest::Approx(3.0));
  CHECK(e2.holds);

  // bound 1, E_sq = 2 per Bell pair, N = 2
  const ComplementarityReport bell = complementarity_check(locc::testing::bell_ensemble());
  CHECK(std::abs(bell.lhs - 2.0) < 1e-9);
  CHECK(bell.capacity_D == doctest::Approx(2.0));
  CHECK(bell.holds);

  Rng rng(locc::testing::suite_seed(42));
  const Ensemble mixed = locc::testing::random_ensemble(SystemLayout({2, 2}), 2, rng, 1.0);
  CHECK_THROWS_AS(complementarity_check(mixed), PurityError);
}

TEST_CASE("single-party ensembles collapse to the Holevo quantity") {
  Rng rng(locc::testing::suite_seed(43));
  for (int trial = 0; trial < 50; ++trial) {
    const Ensemble e = locc::testing::random_ensemble(SystemLayout({rng.uniform_int(2, 5)}), 3, rng);
    CHECK(std::abs(locc_bound(e).bound_bits - holevo_chi(e)) < 1e-12);
  }
}

TEST_CASE("random ensemble properties") {
  Rng rng(locc::testing::suite_seed(44));
  for (int trial = 0; trial < 60; ++trial) {
    const SystemLayout layout = locc::testing::random_layout(2, 3, 2, 3, rng);
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 5));
    const Ensemble e = locc::testing::random_ensemble(layout, n, rng);
    const BoundReport r = locc_bound(e);
    check_report_consistency(r);
    if (layout.parties() == 2) CHECK(std::abs(bipartite_bound(e) - r.bound_bits) < 1e-12);

    // member order does not change the value
    std::vector<EnsembleMember> members = e.members();
    std::reverse(members.begin(), members.end());
    CHECK(std::abs(locc_bound(Ensemble(layout, members)).bound_bits - r.bound_bits) < 1e-12);

    const Ensemble pure = locc::testing::random_ensemble(layout, n, rng, 0.0);
    const BoundReport rp = locc_bound(pure);
    double mean_esq = 0.0;
    for (const auto& m : pure.members()) mean_esq += m.probability * pure_squashed_entanglement(m.state);
    const double sum = std::accumulate(rp.party_entropies.begin(), rp.party_entropies.end(), 0.0);
    CHECK(rp.bound_bits <= sum - mean_esq / layout.parties() + 1e-9);
    CHECK(complementarity_check(pure).holds);
  }
}

TEST_CASE("encoding ensembles") {
  const QuantumState phi = locc::testing::phi_plus();
  const std::vector<Encoding> identity{{1.0, pauli('I')}};
  const Ensemble same = build_encoding_ensemble(phi, identity);
  REQUIRE(same.size() == 1);
  CHECK((same[0].state.density() - phi.density()).cwiseAbs().maxCoeff() < 1e-15);

  // Paulis on the first half of |Phi+> give the four Bell states.
  const Ensemble bells = build_encoding_ensemble(phi, pauli_encodings());
  const Ensemble reference = locc::testing::bell_ensemble();
  for (std::size_t x = 0; x < 4; ++x) {
    double best = 0.0;
    for (std::size_t k = 0; k < 4; ++k)
      best = std::max(best, std::abs(reference[k].state.amplitudes().dot(bells[x].state.amplitudes())));
    CHECK(std::abs(best - 1.0) < 1e-12);
  }

  const SystemLayout two({2, 2});
  const std::vector<Encoding> flips{{0.5, pauli('I')}, {0.5, pauli('X')}};
  const Ensemble flipped = build_encoding_ensemble(locc::testing::ket_state("00"), flips);
  CHECK((flipped[0].state.amplitudes() - basis_ket(two, "00")).norm() < 1e-15);
  CHECK((flipped[1].state.amplitudes() - basis_ket(two, "10")).norm() < 1e-15);

  const std::vector<int> second{2};
  const Ensemble on_b = build_encoding_ensemble(locc::testing::ket_state("00"), flips, second);
  CHECK((on_b[1].state.amplitudes() - basis_ket(two, "01")).norm() < 1e-15);

  const std::vector<Encoding> bad{{1.0, ComplexMatrix(2.0 * pauli('X'))}};
  CHECK_THROWS_AS(build_encoding_ensemble(phi, bad), UnitarityError);
}

TEST_CASE("encodings leave receiver reductions untouched") {
  Rng rng(locc::testing::suite_seed(45));
  for (int trial = 0; trial < 20; ++trial) {
    const SystemLayout layout({2, 3, 2});
    const QuantumState base = rng.uniform() < 0.5 ? locc::testing::random_pure(layout, rng)
                                                   : locc::testing::random_mixed(layout, 3, rng);
    std::vector<Encoding> enc;
    const std::vector<double> p = locc::testing::random_distribution(3, rng);
    for (double px : p) enc.push_back({px, locc::testing::random_unitary(2, rng)});
    const Ensemble e = build_encoding_ensemble(base, enc);
    for (const auto& m : e.members())
      for (int party : {2, 3})
        CHECK((m.state.reduce(party) - base.reduce(party)).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("dense coding bound") {
  const std::vector<int> sender_dims{2};
  const std::vector<int> receiver{2};
  const Ensemble bells = build_encoding_ensemble(locc::testing::phi_plus(), pauli_encodings());
  CHECK(std::abs(dense_coding_bound(bells, sender_dims, receiver) - 1.0) < 1e-12);

  const SystemLayout two({2, 2});
  const QuantumState product = QuantumState::mixed(two, 0.25 * ComplexMatrix::Identity(4, 4));
  const std::vector<Encoding> identity{{1.0, pauli('I')}};
  CHECK(std::abs(dense_coding_bound(build_encoding_ensemble(product, identity), sender_dims, receiver) - 1.0) < 1e-12);

  const std::vector<Encoding> flips{{0.5, pauli('I')}, {0.5, pauli('X')}};
  CHECK(std::abs(dense_coding_bound(build_encoding_ensemble(locc::testing::ket_state("00"), flips), sender_dims, receiver) - 1.0) < 1e-12);

  const std::vector<int> none{};
  CHECK_THROWS_AS(dense_coding_bound(bells, sender_dims, none), ArityError);
  const std::vector<int> out_of_range{3};
  CHECK_THROWS_AS(dense_coding_bound(bells, sender_dims, out_of_range), LayoutError);
}

TEST_CASE("dense coding bound on maximally entangled resources stays above the sender floor") {
  Rng rng(locc::testing::suite_seed(46));
  const std::vector<int> sender_dims{2};
  const std::vector<int> receiver{2};
  for (int trial = 0; trial < 20; ++trial) {
    // rotate Bob's half: receiver reduction remains I/2, members remain pure
    const std::vector<int> bob{2};
    const ComplexMatrix u = embed_operator(locc::testing::random_unitary(2, rng), SystemLayout({2, 2}), bob);
    const QuantumState base = QuantumState::pure(SystemLayout({2, 2}), u * locc::testing::phi_plus().amplitudes());
    const Ensemble e = build_encoding_ensemble(base, pauli_encodings());
    CHECK(dense_coding_bound(e, sender_dims, receiver) >= 1.0 - 1e-9);
  }
}
