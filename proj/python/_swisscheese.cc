// Copyright 2026 The SwissCheese Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Python bindings. Reports and traces cross the boundary as plain dicts built
// from the same JSON the CLI emits.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "swisscheese/cheese.h"
#include "swisscheese/constructions.h"
#include "swisscheese/error.h"
#include "swisscheese/geometry.h"
#include "swisscheese/io.h"
#include "swisscheese/transforms.h"

namespace py = pybind11;
using namespace swisscheese;

namespace {

using DiskTuple = std::tuple<double, double, double>;

Disk ToDisk(const DiskTuple& t) {
  return {std::get<0>(t), std::get<1>(t), std::get<2>(t)};
}

DiskTuple FromDisk(const Disk& d) { return {d.cx, d.cy, d.r}; }

py::object ToPy(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<RegionPair> ToRegions(const std::vector<py::dict>& in) {
  std::vector<RegionPair> out;
  for (const py::dict& d : in) {
    RegionPair p;
    auto c = d["center"].cast<std::pair<double, double>>();
    p.center = {c.first, c.second};
    p.inner = d["inner"].cast<double>();
    p.outer = d["outer"].cast<double>();
    p.margin = d["margin"].cast<double>();
    p.Validate();
    out.push_back(p);
  }
  return out;
}

py::tuple Transformed(const TransformResult& r) {
  return py::make_tuple(r.cheese, ToPy(ToJson(r.trace)));
}

}  // namespace

PYBIND11_MODULE(_swisscheese, m) {
  m.doc() = "Swiss cheese constructions: core bindings";

  static py::exception<CheeseError> error(m, "CheeseError");
  // Raised instances carry the machine-readable code as `.code`.
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const CheeseError& e) {
      py::object inst =
          py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      inst.attr("code") = std::string(ErrorCodeName(e.code()));
      PyErr_SetObject(error.ptr(), inst.ptr());
    }
  });

  py::class_<AbstractSwissCheese>(m, "Cheese")
      .def(py::init([](const DiskTuple& outer,
                       const std::vector<DiskTuple>& holes,
                       const std::string& name) {
             std::vector<Disk> hs;
             hs.reserve(holes.size());
             for (const auto& h : holes) hs.push_back(ToDisk(h));
             return AbstractSwissCheese(ToDisk(outer), std::move(hs), name);
           }),
           py::arg("outer"), py::arg("holes") = std::vector<DiskTuple>{},
           py::arg("name") = "")
      .def_property_readonly("outer",
                             [](const AbstractSwissCheese& a) {
                               return FromDisk(a.outer());
                             })
      .def_property_readonly("holes",
                             [](const AbstractSwissCheese& a) {
                               std::vector<DiskTuple> out;
                               for (const Disk& d : a.holes()) {
                                 out.push_back(FromDisk(d));
                               }
                               return out;
                             })
      .def_property_readonly("name", &AbstractSwissCheese::name)
      .def("__len__", &AbstractSwissCheese::hole_count)
      .def("__eq__", [](const AbstractSwissCheese& a,
                        const AbstractSwissCheese& b) { return a == b; })
      .def("__repr__", [](const AbstractSwissCheese& a) {
        return "<Cheese holes=" + std::to_string(a.hole_count()) + ">";
      });

  m.attr("DEFAULT_TOLERANCE") = kDefaultTolerance;

  m.def("load", [](const std::string& text) { return LoadCheese(text); },
        py::arg("text"));
  m.def("dump", &SaveCheese, py::arg("cheese"));
  m.def("report",
        [](const AbstractSwissCheese& a, double tol) {
          return ToPy(ToJson(Report(a, tol)));
        },
        py::arg("cheese"), py::arg("tol") = kDefaultTolerance);
  m.def("delta", &Delta, py::arg("cheese"), py::arg("alpha"));
  m.def("delta_annular", &DeltaAnnular, py::arg("cheese"));
  m.def("radius_sum", &RadiusSum, py::arg("cheese"));
  m.def("is_classical", &IsClassical, py::arg("cheese"),
        py::arg("tol") = kDefaultTolerance);
  m.def("is_semiclassical", &IsSemiclassical, py::arg("cheese"),
        py::arg("tol") = kDefaultTolerance);
  m.def("is_annular", &IsAnnular, py::arg("cheese"),
        py::arg("tol") = kDefaultTolerance);
  m.def("is_redundancy_free", &IsRedundancyFree, py::arg("cheese"),
        py::arg("tol") = kDefaultTolerance);
  m.def("contains_point",
        [](const AbstractSwissCheese& a, double x, double y, double tol) {
          return ContainsPoint(a, {x, y}, tol);
        },
        py::arg("cheese"), py::arg("x"), py::arg("y"),
        py::arg("tol") = kDefaultTolerance);
  m.def("estimate_area",
        [](const AbstractSwissCheese& a, std::int64_t samples,
           std::uint64_t seed) {
          AreaEstimate e = EstimateArea(a, samples, seed);
          return py::make_tuple(e.estimate, e.half_width);
        },
        py::arg("cheese"), py::arg("samples") = 1000000,
        py::arg("seed") = 1);

  m.def("minimal_covering_disk",
        [](const DiskTuple& a, const DiskTuple& b) {
          return FromDisk(MinimalCoveringDisk(ToDisk(a), ToDisk(b)));
        });
  m.def("maximal_avoiding_subdisk",
        [](const DiskTuple& outer, const DiskTuple& d) {
          return FromDisk(MaximalAvoidingSubdisk(ToDisk(outer), ToDisk(d)));
        });

  m.def("reduce",
        [](const AbstractSwissCheese& a) {
          return Transformed(ReduceRedundancy(a));
        },
        py::arg("cheese"));
  m.def("semiclassicalise",
        [](const AbstractSwissCheese& a) {
          return Transformed(Semiclassicalise(a));
        },
        py::arg("cheese"));
  m.def("classicalise",
        [](const AbstractSwissCheese& a) {
          return Transformed(Classicalise(a));
        },
        py::arg("cheese"));
  m.def("classicalise_annular",
        [](const AbstractSwissCheese& a, double tol) {
          return Transformed(ClassicaliseAnnular(a, tol));
        },
        py::arg("cheese"), py::arg("tol") = kDefaultTolerance);
  m.def("classicalise_controlled",
        [](const AbstractSwissCheese& a, const std::vector<py::dict>& regions,
           double tol) {
          const std::vector<RegionPair> rs = ToRegions(regions);
          ControlledResult r = ClassicaliseControlled(a, rs, tol);
          py::dict info;
          info["trace"] = ToPy(ToJson(r.trace));
          info["admissibility"] = ToPy(ToJson(r.admissibility));
          info["control"] = ToPy(ToJson(r.control));
          return py::make_tuple(r.cheese, info);
        },
        py::arg("cheese"), py::arg("regions"),
        py::arg("tol") = kDefaultTolerance);

  m.def("figure1", &Figure1Cheese);
  m.def("ring_filler", &RingFiller, py::arg("r_out"), py::arg("r_in"),
        py::arg("budget"), py::arg("count"));
  m.def("wermer_refine",
        [](const AbstractSwissCheese& x0, double epsilon, double M,
           std::int64_t n_max, int samples, std::uint64_t seed) {
          WermerParams p;
          p.epsilon = epsilon;
          p.M = M;
          p.n_max = n_max;
          p.sample_count = samples;
          p.seed = seed;
          WermerResult r = WermerRefine(x0, p);
          return ToPy(ToJson(r, false));
        },
        py::arg("x0"), py::arg("epsilon") = 0.1, py::arg("M") = 1.0,
        py::arg("n_max") = std::int64_t{1} << 14, py::arg("samples") = 10000,
        py::arg("seed") = WermerParams{}.seed);
  m.def("morris",
        [](double C, int levels, int ring_count) {
          MorrisResult r = MorrisAssemble(C, levels, MakeRingFiller(ring_count));
          return py::make_tuple(r.cheese, ToPy(ToJson(r.report)));
        },
        py::arg("C"), py::arg("levels"), py::arg("ring_count") = 8);
  m.def("morris_verify",
        [](const AbstractSwissCheese& b, double C, double tol) {
          return ToPy(ToJson(MorrisVerify(b, C, tol)));
        },
        py::arg("cheese"), py::arg("C"), py::arg("tol") = kDefaultTolerance);
  m.def("render_svg",
        [](const AbstractSwissCheese& a, int width, bool show_indices) {
          RenderOptions o;
          o.width_px = width;
          o.show_indices = show_indices;
          return RenderSvg(a, o);
        },
        py::arg("cheese"), py::arg("width") = 512,
        py::arg("show_indices") = false);
}
