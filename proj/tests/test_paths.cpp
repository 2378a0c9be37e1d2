#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>

#include "doctest.h"
#include "skein/paths.hpp"

using namespace skein::paths;

TEST_CASE("path construction validates steps") {
  CHECK_NOTHROW(DyckPath("UUDU"));
  CHECK_THROWS_AS(DyckPath("DU"), std::invalid_argument);
  CHECK_THROWS_AS(DyckPath("UX"), std::invalid_argument);
  CHECK(DyckPath("UUD").end_height() == 1);
  CHECK(DyckPath("UDUD").heights() == std::vector<int>{0, 1, 0, 1, 0});
}

TEST_CASE("path enumeration is exhaustive and ordered") {
  auto steps_of = [](const std::vector<DyckPath>& v) {
    std::vector<std::string> s;
    for (const auto& p : v) s.push_back(p.steps());
    return s;
  };
  CHECK(steps_of(enumerate_paths(2, 0)) == std::vector<std::string>{"UD"});
  CHECK(steps_of(enumerate_paths(4, 0)) ==
        std::vector<std::string>{"UUDD", "UDUD"});
  CHECK(steps_of(enumerate_paths(3, 1)) ==
        std::vector<std::string>{"UUD", "UDU"});
  CHECK(steps_of(enumerate_paths(4, 2)) ==
        std::vector<std::string>{"UUUD", "UUDU", "UDUU"});
  CHECK(enumerate_paths(2, 4).empty());
  CHECK(enumerate_paths(3, 0).empty());
  CHECK(enumerate_paths(0, 0).size() == 1);  // the empty path
}

TEST_CASE("closed counts match enumeration") {
  CHECK(count_paths_closed(4, 2) == 3);
  CHECK(count_paths_closed(12, 0) == 132);  // Catalan number
  CHECK(count_paths_closed(7, 7) == 1);
  CHECK(count_paths_closed(3, 0) == 0);
  for (int n = 0; n <= 14; ++n)
    for (int h = 0; h <= n + 1; ++h)
      CHECK(count_paths_closed(n, h) ==
            static_cast<long long>(enumerate_paths(n, h).size()));
}

TEST_CASE("down step positions") {
  CHECK(down_steps(DyckPath("UDUD"), 1) == std::vector<int>{1, 3});
  CHECK(down_steps(DyckPath("UUDD"), 2) == std::vector<int>{2});
  CHECK(down_steps(DyckPath("UUUU"), 1).empty());
  CHECK_THROWS_AS(down_steps(DyckPath("UD"), 0), std::domain_error);
}

TEST_CASE("step counts by enumeration") {
  CHECK(alpha_enumerate(4, 0, 1) == 3);
  CHECK(alpha_enumerate(4, 2, 2) == 1);
  CHECK(alpha_enumerate(3, 1, 1) == 1);
}

TEST_CASE("closed step counts") {
  CHECK(alpha_closed(4, 2, 1) == 1);
  CHECK(alpha_closed(4, 0, 1) == 3);
  CHECK(alpha_closed(4, 2, 3) == 1);
  for (int n = 0; n <= 12; ++n)
    for (int h = n % 2; h <= n; h += 2)
      for (int k = 1; k <= (n + h) / 2 + 2; ++k)
        CHECK(alpha_closed(n, h, k) == alpha_enumerate(n, h, k));
}

TEST_CASE("parallel step counting matches serial") {
  for (int k = 1; k <= 7; ++k)
    CHECK(alpha_enumerate(14, 2, k, skein::Exec::parallel) ==
          alpha_enumerate(14, 2, k, skein::Exec::serial));
}

TEST_CASE("cut-glue map on worked examples") {
  // Mark the 1-down step of UDU.
  auto img = theta_map(MarkedPath{DyckPath("UDU"), 1}, 1);
  CHECK(img.path.steps() == "UUU");
  CHECK(img.j == 0);

  img = theta_map(MarkedPath{DyckPath("UUDU"), 2}, 2);
  CHECK(img.path.steps() == "UUUU");
  CHECK(img.j == 1);

  img = theta_map(MarkedPath{DyckPath("UD"), 1}, 1);
  CHECK(img.path.steps() == "UU");
  CHECK(img.j == 0);

  CHECK_THROWS_AS(theta_map(MarkedPath{DyckPath("UU"), 1}, 1), std::domain_error);
}

TEST_CASE("inverse map on worked examples") {
  MarkedPath m = phi_map(DyckPath("UUU"), 1, 1);
  CHECK(m.path.steps() == "UDU");
  CHECK(m.index == 1);

  m = phi_map(DyckPath("UUUU"), 2, 2);
  CHECK(m.path.steps() == "UUDU");
  CHECK(m.index == 2);

  m = phi_map(DyckPath("UU"), 1, 0);
  CHECK(m.path.steps() == "UD");
  CHECK(m.index == 1);

  // 2k - 2j + h cannot reach height 1 for k = 2, h = 1 with 0 <= j <= min(1,1).
  CHECK_THROWS_AS(phi_map(DyckPath("UDU"), 2, 1), std::domain_error);
}

TEST_CASE("cut-glue roundtrip is exhaustive through n = 9") {
  for (int n = 1; n <= 9; ++n)
    for (int h = n % 2; h <= n; h += 2)
      for (int k = 1; k <= (n + h) / 2; ++k) {
        const int s = std::min(k - 1, h);
        std::set<std::pair<int, std::string>> image;
        long long marked = 0;
        for (const DyckPath& p : enumerate_paths(n, h))
          for (int idx : down_steps(p, k)) {
            ++marked;
            const auto img = theta_map(MarkedPath{p, idx}, k);
            CHECK(img.path.end_height() == 2 * k - 2 * img.j + h);
            CHECK(image.insert({img.j, img.path.steps()}).second);
            const MarkedPath back = phi_map(img.path, k, h);
            CHECK(back.path == p);
            CHECK(back.index == idx);
          }
        long long expected = 0;
        for (int j = 0; j <= s; ++j)
          expected += count_paths_closed(n, 2 * k - 2 * j + h);
        CHECK(marked == expected);
        CHECK(marked == alpha_closed(n, h, k));
      }
}

TEST_CASE("down steps are conserved") {
  for (int n = 0; n <= 12; ++n)
    for (int h = n % 2; h <= n; h += 2) {
      long long sum = 0;
      for (int k = 1; k <= (n + h) / 2; ++k) sum += alpha_closed(n, h, k);
      CHECK(sum == (n - h) / 2 * count_paths_closed(n, h));
    }
}

TEST_CASE("binomial difference identity") {
  // C(n,k) - C(n,k-1) = (n-2k+1)/(n+1) C(n+1,k), exact over the integers.
  auto binom = [](long long n, long long k) -> long long {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
  };
  for (int n = 0; n <= 30; ++n)
    for (int k = 0; k <= n; ++k) {
      const long long lhs = (binom(n, k) - binom(n, k - 1)) * (n + 1);
      const long long rhs = (n - 2 * k + 1) * binom(n + 1, k);
      CHECK(lhs == rhs);
    }
}
