#include "padyn/residue_set.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "padyn/error.hpp"

namespace padyn {

namespace {

std::vector<ResidueClass> normalize(long p, std::vector<ResidueClass> in) {
  for (auto& c : in) c.residue %= prime_power_u64(p, c.exponent);
  std::sort(in.begin(), in.end(),
            [](const ResidueClass& a, const ResidueClass& b) {
              return a.exponent != b.exponent ? a.exponent < b.exponent : a.residue < b.residue;
            });
  in.erase(std::unique(in.begin(), in.end()), in.end());

  // Merge complete sibling families into their parent until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<int, u64>, int> siblings;
    for (const auto& c : in) {
      if (c.exponent > 0) {
        ++siblings[{c.exponent, c.residue % prime_power_u64(p, c.exponent - 1)}];
      }
    }
    for (const auto& [key, n] : siblings) {
      if (n == p) {
        std::erase_if(in, [&](const ResidueClass& c) {
          return c.exponent == key.first &&
                 c.residue % prime_power_u64(p, key.first - 1) == key.second;
        });
        in.push_back({key.second, key.first - 1});
        changed = true;
        break;
      }
    }
  }

  std::vector<ResidueClass> out;
  std::sort(in.begin(), in.end(),
            [](const ResidueClass& a, const ResidueClass& b) {
              return a.exponent != b.exponent ? a.exponent < b.exponent : a.residue < b.residue;
            });
  for (const auto& c : in) {
    const bool covered = std::any_of(out.begin(), out.end(), [&](const ResidueClass& o) {
      return c.residue % prime_power_u64(p, o.exponent) == o.residue;
    });
    if (!covered) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const ResidueClass& a, const ResidueClass& b) {
    return a.residue != b.residue ? a.residue < b.residue : a.exponent < b.exponent;
  });
  return out;
}

}  // namespace

ResidueSet::ResidueSet(long p, std::vector<ResidueClass> classes)
    : prime_(p), classes_(normalize(p, std::move(classes))) {}

ResidueSet ResidueSet::all(long p) { return ResidueSet(p, {{0, 0}}); }

ResidueSet ResidueSet::sphere(long p) {
  std::vector<ResidueClass> cs;
  for (long j = 1; j < p; ++j) cs.push_back({static_cast<u64>(j), 1});
  return ResidueSet(p, std::move(cs));
}

ResidueSet ResidueSet::residue_class(long p, u64 residue, int exponent) {
  return ResidueSet(p, {{residue, exponent}});
}

ResidueSet ResidueSet::from_classes(long p, std::vector<ResidueClass> classes) {
  if (classes.empty()) throw Error(ErrorCode::RangeError, "empty residue set");
  return ResidueSet(p, std::move(classes));
}

ResidueSet ResidueSet::parse(long p, std::string_view spec) {
  auto fail = [&](const std::string& why) -> ResidueSet {
    throw Error(ErrorCode::ParseError, "--domain: '" + std::string(spec) + "': " + why);
  };
  if (spec == "all") return all(p);
  if (spec == "sphere:1") return sphere(p);
  std::string_view body = spec;
  if (body.rfind("class:", 0) == 0) body.remove_prefix(6);
  const auto mod = body.find(" mod ");
  if (mod == std::string_view::npos) {
    return fail("expected all | sphere:1 | class:c mod p^t");
  }
  const std::string c_text(body.substr(0, mod));
  std::string m_text(body.substr(mod + 5));
  long c = 0;
  int t = 0;
  try {
    size_t used = 0;
    c = std::stol(c_text, &used);
    if (used != c_text.size() || c < 0) return fail("bad residue '" + c_text + "'");
    const auto caret = m_text.find('^');
    if (caret != std::string::npos) {
      const long base = std::stol(m_text.substr(0, caret));
      if (base != p) return fail("modulus base must be p=" + std::to_string(p));
      t = std::stoi(m_text.substr(caret + 1));
    } else {
      long m = std::stol(m_text, &used);
      if (used != m_text.size() || m < 1) return fail("bad modulus '" + m_text + "'");
      while (m % p == 0) {
        m /= p;
        ++t;
      }
      if (m != 1) return fail("modulus must be a power of p=" + std::to_string(p));
    }
  } catch (const std::logic_error&) {
    return fail("malformed class");
  }
  if (t < 0 || t > 62) return fail("exponent out of range");
  return residue_class(p, static_cast<u64>(c), t);
}

bool ResidueSet::contains(u64 x, int level) const {
  return std::any_of(classes_.begin(), classes_.end(), [&](const ResidueClass& c) {
    const u64 m = prime_power_u64(prime_, std::min(level, c.exponent));
    return x % m == c.residue % m;
  });
}

std::vector<u64> ResidueSet::elements(int level) const {
  std::vector<u64> out;
  const u64 top = prime_power_u64(prime_, level);
  for (const auto& c : classes_) {
    if (c.exponent >= level) {
      out.push_back(c.residue % top);
      continue;
    }
    const u64 step = prime_power_u64(prime_, c.exponent);
    for (u64 x = c.residue; x < top; x += step) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

u64 ResidueSet::count(int level) const {
  if (level >= finest_exponent()) {
    u64 n = 0;
    for (const auto& c : classes_) n += prime_power_u64(prime_, level - c.exponent);
    return n;
  }
  return elements(level).size();
}

int ResidueSet::finest_exponent() const {
  int out = 0;
  for (const auto& c : classes_) out = std::max(out, c.exponent);
  return out;
}

std::vector<Ball> ResidueSet::balls() const {
  std::vector<Ball> out;
  for (const auto& c : classes_) {
    out.push_back(Ball::residue_class(prime_, mpz_class(static_cast<unsigned long>(c.residue)),
                                      c.exponent));
  }
  return out;
}

std::string ResidueSet::to_string() const {
  if (*this == all(prime_)) return "all";
  if (prime_ > 2 && *this == sphere(prime_)) return "sphere:1";
  std::ostringstream out;
  for (size_t i = 0; i < classes_.size(); ++i) {
    if (i) out << " | ";
    if (classes_.size() == 1) out << "class:";
    out << classes_[i].residue << " mod " << prime_ << '^' << classes_[i].exponent;
  }
  return out.str();
}

}  // namespace padyn
