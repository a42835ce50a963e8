#include "gentlekit/string_modules.hpp"

#include <algorithm>

namespace gentlekit {

  bool IntMatrix::is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](long x) { return x == 0; });
  }

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
    if (a.cols != b.rows) {
      throw std::invalid_argument("matrix shapes do not compose");
    }
    IntMatrix c{a.rows, b.cols, std::vector<long>(a.rows * b.cols, 0)};
    for (std::size_t i = 0; i < a.rows; ++i) {
      for (std::size_t k = 0; k < a.cols; ++k) {
        if (a(i, k) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols; ++j) {
          c(i, j) += a(i, k) * b(k, j);
        }
      }
    }
    return c;
  }

  StringModuleRep string_module(BoundQuiver const& q, StringWord const& w) {
    if (auto d = string_defect(q, w)) {
      throw QuiverError("not a string (" + std::string(describe(d->defect))
                        + "): " + format_word(q, w));
    }
    StringModuleRep m;
    m.word            = w;
    m.position_vertex = vertex_walk(q, w);
    m.dimension.assign(q.vertex_count(), 0);
    for (VertexIndex v : m.position_vertex) {
      m.coordinate.push_back(m.dimension[v]++);
    }
    for (auto const& a : q.arrows()) {
      std::size_t const rows = m.dimension[a.target], cols = m.dimension[a.source];
      m.arrow_maps.push_back({rows, cols, std::vector<long>(rows * cols, 0)});
    }
    for (std::size_t i = 1; i <= w.length(); ++i) {
      Letter const l = w[i - 1];
      // a direct letter sends position i-1 to i, an inverse one i to i-1
      std::size_t const from = l.is_direct() ? i - 1 : i;
      std::size_t const to   = l.is_direct() ? i : i - 1;
      m.arrow_maps[l.arrow](m.coordinate[to], m.coordinate[from]) = 1;
    }
    return m;
  }

  bool satisfies_relations(BoundQuiver const& q, StringModuleRep const& m) {
    // the path αβ acts as M(β) M(α)
    return std::all_of(q.relations().begin(), q.relations().end(), [&](Relation r) {
      return (m.arrow_maps[r.second] * m.arrow_maps[r.first]).is_zero();
    });
  }

  HomCertificate hom_dim_combinatorial(BoundQuiver const& q,
                                       StringWord const&  c,
                                       StringWord const&  d) {
    for (auto const* w : {&c, &d}) {
      if (!is_string(q, *w)) {
        throw QuiverError("not a string: " + format_word(q, *w));
      }
    }
    HomCertificate cert;
    auto const     tops    = factorizations(c, FactorKind::Top);
    auto const     bottoms = factorizations(d, FactorKind::Bottom);
    for (auto const& top : tops) {
      auto const sigma = substring(q, c, top.begin, top.end);
      for (auto const& bottom : bottoms) {
        if (top.end - top.begin != bottom.end - bottom.begin) {
          continue;
        }
        auto const rho = substring(q, d, bottom.begin, bottom.end);
        if (sigma.is_trivial()) {
          if (sigma.start() == rho.start()) {
            cert.pairs.push_back({top, bottom, Match::Equal});
          }
        } else if (sigma == rho) {
          cert.pairs.push_back({top, bottom, Match::Equal});
        } else if (sigma == inverse(q, rho)) {
          cert.pairs.push_back({top, bottom, Match::Inverse});
        }
      }
    }
    cert.count = cert.pairs.size();
    return cert;
  }

  namespace {
    template <typename Field>
    std::size_t intertwiner_nullity(Field const&           field,
                                    BoundQuiver const&     q,
                                    StringModuleRep const& mc,
                                    StringModuleRep const& md) {
      // unknown f_v[p][k], p < dim_d(v), k < dim_c(v)
      std::vector<std::size_t> offset(q.vertex_count() + 1, 0);
      for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
        offset[v + 1] = offset[v] + md.dimension[v] * mc.dimension[v];
      }
      auto unknown = [&](VertexIndex v, std::size_t p, std::size_t k) {
        return offset[v] + p * mc.dimension[v] + k;
      };

      using Row = typename linalg::EchelonBasis<Field>::Row;
      linalg::EchelonBasis<Field> basis(field);
      for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
        VertexIndex const s = q.arrow(a).source, t = q.arrow(a).target;
        auto const&       Mc = mc.arrow_maps[a];
        auto const&       Md = md.arrow_maps[a];
        // (f_t Mc - Md f_s)[p][col] = 0
        for (std::size_t p = 0; p < md.dimension[t]; ++p) {
          for (std::size_t col = 0; col < mc.dimension[s]; ++col) {
            std::vector<std::pair<std::size_t, long>> terms;
            for (std::size_t k = 0; k < mc.dimension[t]; ++k) {
              if (Mc(k, col) != 0) {
                terms.emplace_back(unknown(t, p, k), Mc(k, col));
              }
            }
            for (std::size_t k = 0; k < md.dimension[s]; ++k) {
              if (Md(p, k) != 0) {
                terms.emplace_back(unknown(s, k, col), -Md(p, k));
              }
            }
            std::sort(terms.begin(), terms.end());
            Row row;
            for (auto const& [index, coeff] : terms) {
              if (!row.empty() && row.back().first == index) {
                row.back().second = field.add(row.back().second, field.from_int(coeff));
              } else {
                row.emplace_back(index, field.from_int(coeff));
              }
            }
            std::erase_if(row, [&](auto const& e) { return field.is_zero(e.second); });
            basis.insert(std::move(row));
          }
        }
      }
      return offset.back() - basis.rank();
    }
  }  // namespace

  std::size_t hom_dim_linear(BoundQuiver const& q,
                             StringWord const&  c,
                             StringWord const&  d,
                             FieldSpec const&   field) {
    auto const mc = string_module(q, c);
    auto const md = string_module(q, d);
    if (field.kind == FieldSpec::Kind::Rationals) {
      return intertwiner_nullity(linalg::RationalField{}, q, mc, md);
    }
    return intertwiner_nullity(linalg::PrimeField(field.modulus), q, mc, md);
  }

  bool is_brick(BoundQuiver const& q, StringWord const& w) {
    return hom_dim_combinatorial(q, w, w).count == 1;
  }

}  // namespace gentlekit
