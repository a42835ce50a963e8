#pragma once

// Exact fields and sparse Gaussian elimination.

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace gentlekit::linalg {

  struct RationalField {
    using value_type = mpq_class;

    value_type from_int(long v) const { return value_type(v); }
    bool       is_zero(value_type const& x) const { return sgn(x) == 0; }
    value_type add(value_type const& a, value_type const& b) const { return a + b; }
    value_type sub(value_type const& a, value_type const& b) const { return a - b; }
    value_type mul(value_type const& a, value_type const& b) const { return a * b; }
    value_type inv(value_type const& a) const { return 1 / a; }
  };

  class PrimeField {
   public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint32_t p);
    std::uint32_t modulus() const noexcept { return p_; }

    value_type from_int(long v) const {
      long const r = v % static_cast<long>(p_);
      return static_cast<value_type>(r < 0 ? r + p_ : r);
    }
    bool       is_zero(value_type x) const { return x == 0; }
    value_type add(value_type a, value_type b) const {
      return static_cast<value_type>((std::uint64_t{a} + b) % p_);
    }
    value_type sub(value_type a, value_type b) const {
      return static_cast<value_type>((std::uint64_t{a} + p_ - b) % p_);
    }
    value_type mul(value_type a, value_type b) const {
      return static_cast<value_type>(std::uint64_t{a} * b % p_);
    }
    value_type inv(value_type a) const;

   private:
    std::uint32_t p_;
  };

  bool is_prime(std::uint64_t n) noexcept;

  // Rank of a row set, maintained incrementally in row echelon form with
  // unit pivots.
  template <typename Field>
  class EchelonBasis {
   public:
    using value_type = typename Field::value_type;
    using Row        = std::vector<std::pair<std::size_t, value_type>>;

    explicit EchelonBasis(Field field) : field_(std::move(field)) {}

    // Row entries sorted by column, no zeros. Returns whether the rank grew.
    bool insert(Row row) {
      while (!row.empty()) {
        auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) {
          auto const scale = field_.inv(row.front().second);
          for (auto& [col, val] : row) {
            val = field_.mul(val, scale);
          }
          pivots_.emplace(row.front().first, std::move(row));
          return true;
        }
        row = subtract_multiple(row, row.front().second, it->second);
      }
      return false;
    }

    std::size_t rank() const noexcept { return pivots_.size(); }

   private:
    Row subtract_multiple(Row const& a, value_type const& factor,
                          Row const& b) const {
      Row out;
      out.reserve(a.size() + b.size());
      std::size_t i = 0, j = 0;
      while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
          out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
          out.emplace_back(b[j].first,
                           field_.sub(field_.from_int(0),
                                      field_.mul(factor, b[j].second)));
          ++j;
        } else {
          auto v = field_.sub(a[i].second, field_.mul(factor, b[j].second));
          if (!field_.is_zero(v)) {
            out.emplace_back(a[i].first, std::move(v));
          }
          ++i;
          ++j;
        }
      }
      return out;
    }

    Field                         field_;
    std::map<std::size_t, Row>    pivots_;
  };

  template <typename Field>
  std::size_t rank(Field const&                                     field,
                   std::vector<typename EchelonBasis<Field>::Row> rows) {
    EchelonBasis<Field> basis(field);
    for (auto& row : rows) {
      basis.insert(std::move(row));
    }
    return basis.rank();
  }

}  // namespace gentlekit::linalg

namespace gentlekit {

  // "q" for the rationals, "gf:<p>" for a prime field.
  struct FieldSpec {
    enum class Kind { Rationals, PrimeField };
    Kind          kind    = Kind::Rationals;
    std::uint32_t modulus = 32003;

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime(std::uint32_t p);
    static FieldSpec parse(std::string_view text);
    std::string      to_string() const;
    bool operator==(FieldSpec const&) const = default;
  };

}  // namespace gentlekit
