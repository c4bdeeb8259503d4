#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "posetlab/cubes.hpp"
#include "posetlab/dimension.hpp"
#include "posetlab/errors.hpp"
#include "posetlab/estimates.hpp"
#include "posetlab/freeset.hpp"
#include "posetlab/io.hpp"
#include "posetlab/kur.hpp"
#include "posetlab/poset.hpp"

namespace py = pybind11;
using namespace posetlab;

namespace {

Budget make_budget(std::uint64_t max_nodes, std::uint64_t max_ms) {
  return Budget{max_nodes, max_ms};
}

const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    default: return "budget";
  }
}

std::uint64_t mask_of(const SetMapping& f, const std::vector<int>& elems) {
  std::uint64_t m = 0;
  for (int e : elems) {
    if (e < 0 || e >= f.ground()) throw InvalidArgs("element outside ground set");
    m |= 1ull << e;
  }
  return m;
}

std::vector<int> mask_to_list(std::uint64_t m) {
  std::vector<int> out;
  for (int b = 0; m; ++b, m >>= 1)
    if (m & 1) out.push_back(b);
  return out;
}

py::dict relation_dict(const AlephRelation& rel) {
  py::dict d;
  d["offset"] = rel.offset;
  d["order"] = rel.order;
  d["size"] = rel.size.str();
  d["rule"] = rel.rule;
  d["conditional"] = rel.conditional;
  d["aleph"] = rel.render_aleph();
  d["lambda"] = rel.render_lambda();
  return d;
}

}  // namespace

PYBIND11_MODULE(_posetlab, m) {
  m.doc() = "Finite poset toolkit: dimension, breadth, Kuratowski-index "
            "bounds, and free-set search";

  py::register_exception<Error>(m, "PosetlabError");

  py::class_<Poset>(m, "Poset")
      .def("__len__", &Poset::size)
      .def("size", &Poset::size)
      .def("label", [](const Poset& p, int i) { return p.label(i); })
      .def("le", &Poset::le)
      .def("least", [](const Poset& p) { return p.least(); })
      .def("greatest", [](const Poset& p) { return p.greatest(); })
      .def("__repr__", [](const Poset& p) {
        return "<Poset with " + std::to_string(p.size()) + " elements>";
      });

  py::class_<SetMapping>(m, "SetMapping")
      .def(py::init<int, int>(), py::arg("ground"), py::arg("order"))
      .def("ground", &SetMapping::ground)
      .def("order", &SetMapping::order)
      .def("set",
           [](SetMapping& f, const std::vector<int>& key,
              const std::vector<int>& val) {
             f.set(mask_of(f, key), mask_of(f, val));
           })
      .def("value",
           [](const SetMapping& f, const std::vector<int>& key) {
             return mask_to_list(f.value(mask_of(f, key)));
           })
      .def("hull",
           [](const SetMapping& f, const std::vector<int>& x) {
             return mask_to_list(f.hull(mask_of(f, x)));
           })
      .def("__repr__", [](const SetMapping& f) {
        return "<SetMapping order " + std::to_string(f.order()) + " on " +
               std::to_string(f.ground()) + " points>";
      });

  m.def("poset_from_source", &poset_from_source, py::arg("source"),
        "Build a poset from a named constructor string or a file path");
  m.def("serialize_poset", &serialize_poset);
  m.def("mapping_from_source", &mapping_from_source, py::arg("source"));
  m.def("serialize_set_mapping", &serialize_set_mapping);

  m.def("width", [](const Poset& p) { return width(p); });
  m.def("join_irreducible_count",
        [](const Poset& p) { return join_irreducibles(p).count(); });

  m.def(
      "dim",
      [](const Poset& p, std::uint64_t max_nodes, std::uint64_t max_ms) {
        DimResult d = dim_exact(p, make_budget(max_nodes, max_ms));
        py::dict out;
        out["lower"] = d.lower;
        out["upper"] = d.upper;
        out["exact"] = d.exact();
        out["nodes"] = d.stats.nodes;
        return out;
      },
      py::arg("p"), py::arg("max_nodes") = 0, py::arg("max_ms") = 0);

  m.def(
      "breadth",
      [](const Poset& p, std::uint64_t max_nodes, std::uint64_t max_ms) {
        CountResult b = breadth(p, make_budget(max_nodes, max_ms));
        py::dict out;
        out["value"] = b.value;
        out["exact"] = b.exact;
        return out;
      },
      py::arg("p"), py::arg("max_nodes") = 0, py::arg("max_ms") = 0);

  m.def(
      "kur",
      [](const Poset& p, bool assume_gch, std::uint64_t max_nodes,
         std::uint64_t max_ms) {
        KurOptions opts;
        opts.assume_gch = assume_gch;
        BoundInterval b = kur_bounds(p, make_budget(max_nodes, max_ms), opts);
        py::dict out;
        out["lo"] = b.lo;
        out["hi"] = b.hi;
        out["lo_rules"] = b.lo_rules;
        out["hi_rules"] = b.hi_rules;
        out["conditional"] = b.hi_conditional;
        return out;
      },
      py::arg("p"), py::arg("assume_gch") = false, py::arg("max_nodes") = 0,
      py::arg("max_ms") = 0);

  m.def("spencer_exponent_str",
        [](std::uint64_t n, unsigned r) { return spencer_exponent(n, r).str(); });
  m.def("e_str", [](std::uint64_t n, unsigned r) { return e_value(n, r).str(); });
  m.def("spencer_min_n", &spencer_min_n);
  m.def("furedi_kahn_min_d", &furedi_kahn_min_d);
  m.def("dushnik_dim", [](std::uint64_t m_, std::uint64_t k) {
    return dushnik_dim(m_, k);
  });
  m.def("table_e", [](unsigned r, std::uint64_t n_max) {
    py::list rows;
    for (const ETableRow& row : table_e(r, n_max))
      rows.append(py::make_tuple(row.n, row.e.str()));
    return rows;
  });
  m.def("asymptotic_check",
        [](unsigned r, const std::vector<std::uint64_t>& ns) {
          py::list rows;
          for (const AsymptoticRow& row : asymptotic_check(r, ns)) {
            py::dict d;
            d["n"] = row.n;
            d["lg_lg_e"] = row.lg_lg_e;
            d["estimate"] = row.estimate;
            d["ratio"] = row.ratio;
            rows.append(d);
          }
          return rows;
        });
  m.def("best_relation",
        [](std::uint64_t m_, unsigned r) { return relation_dict(best_relation(m_, r)); });

  m.def(
      "find_free",
      [](const SetMapping& f, int m_, std::uint64_t max_nodes,
         std::uint64_t max_ms) {
        FindFreeResult res = find_free(f, m_, make_budget(max_nodes, max_ms));
        py::dict out;
        out["status"] = status_name(res.status);
        out["witness"] = mask_to_list(res.witness);
        out["nodes"] = res.stats.nodes;
        return out;
      },
      py::arg("f"), py::arg("m"), py::arg("max_nodes") = 0,
      py::arg("max_ms") = 0);

  m.def("is_free", [](const SetMapping& f, const std::vector<int>& h) {
    return is_free(f, mask_of(f, h));
  });
  m.def("isotone_closure", &isotone_closure);
  m.def("check_free_reduction",
        [](const SetMapping& f, const std::vector<int>& h) {
          ReductionReport rep = check_free_reduction(f, mask_of(f, h));
          py::dict out;
          out["free_all"] = rep.free_all;
          out["free_order_r"] = rep.free_order_r;
          out["decomposition_ok"] = rep.decomposition_ok;
          out["consistent"] = rep.consistent();
          return out;
        });

  m.def(
      "leadsto_shadow",
      [](const Poset& p, const SetMapping& f, std::uint64_t max_nodes,
         std::uint64_t max_ms) {
        FreeEmbedding res = leadsto_shadow(p, f, make_budget(max_nodes, max_ms));
        py::dict out;
        out["status"] = status_name(res.status);
        out["map"] = res.map;
        return out;
      },
      py::arg("p"), py::arg("f"), py::arg("max_nodes") = 0,
      py::arg("max_ms") = 0);

  auto config_dict = [](const ConfigResult& res) {
    py::dict out;
    out["status"] = status_name(res.status);
    out["xi"] = res.xi;
    out["eta"] = res.eta;
    return out;
  };
  m.def("config_search_p", [config_dict](const SetMapping& f) {
    return config_dict(config_search_p(f));
  });
  m.def("config_search_q", [config_dict](const SetMapping& f) {
    return config_dict(config_search_q(f));
  });

  m.def("check_dim_equals_suitable", [](int m_, int r) {
    SuitableCheckReport rep = check_dim_equals_suitable(m_, r);
    py::dict out;
    out["dim"] = rep.dim;
    out["n_suitable"] = rep.n_suitable;
    out["both_exact"] = rep.both_exact;
    out["equal"] = rep.equal;
    return out;
  });
  m.def("check_dim_transfer", [](int m_, int r) {
    TransferReport rep = check_dim_transfer(m_, r);
    py::dict out;
    out["dim_levels"] = rep.dim_levels;
    out["dim_upto"] = rep.dim_upto;
    out["both_exact"] = rep.both_exact;
    out["equal"] = rep.equal;
    out["psi_verified"] = rep.psi_verified;
    return out;
  });
}
