#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <cmath>
#include <limits>

#include "palfm/error.hpp"
#include "palfm/index.hpp"
#include "palfm/oracle.hpp"
#include "palfm/palcore.hpp"
#include "palfm/serialize.hpp"

namespace py = pybind11;
using namespace palfm;

namespace {

// INF becomes math.inf; finite lengths stay ints.
py::object to_py(PalLength v) {
    if (v.is_inf()) {
        return py::float_(std::numeric_limits<double>::infinity());
    }
    return py::int_(v.value());
}

// $ is 0, groups are their ids, INF is math.inf.
py::object to_py(SymbolCode c) {
    if (c.is_inf()) {
        return py::float_(std::numeric_limits<double>::infinity());
    }
    return py::int_(c.is_dollar() ? 0 : c.group_id());
}

template <typename T>
py::list to_py_list(const std::vector<T>& values) {
    py::list out;
    for (const auto& v : values) {
        out.append(to_py(v));
    }
    return out;
}

py::bytes image_of(const PalFmIndex& idx) {
    const auto img = serialize(idx);
    return {reinterpret_cast<const char*>(img.data()), img.size()};
}

PalFmIndex from_image(const py::bytes& data) {
    const std::string_view view = data;
    return deserialize({reinterpret_cast<const std::uint8_t*>(view.data()), view.size()});
}

py::dict stats_dict(const PalFmIndex& idx) {
    const auto s = idx.stats();
    py::dict d;
    d["n"] = s.n;
    d["rows"] = s.rows;
    d["max_group"] = s.max_group;
    d["delta"] = s.delta;
    d["samples"] = s.samples;
    d["f_bits"] = s.f_bits;
    d["l_bits"] = s.l_bits;
    d["lf_bits"] = s.lf_bits;
    d["rmq_bits"] = s.rmq_bits;
    d["sampled_bits"] = s.sampled_bits;
    d["sample_value_bits"] = s.sample_value_bits;
    d["total_bits"] = s.total_bits;
    d["bits_per_symbol"] = s.bits_per_symbol;
    return d;
}

}  // namespace

PYBIND11_MODULE(_palfm, m) {
    m.doc() = "FM-index for palindrome pattern matching";

    py::exception<format_error>(m, "FormatError", PyExc_ValueError);
    py::exception<build_limit_error>(m, "BuildLimitError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const format_error& e) {
            const py::object type = py::module_::import("palfm._palfm").attr("FormatError");
            py::object err = type(e.what());
            err.attr("kind") = to_string(e.error_kind());
            py::set_error(type, err);
        } catch (const build_limit_error& e) {
            py::set_error(py::module_::import("palfm._palfm").attr("BuildLimitError"), e.what());
        } catch (const usage_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const query_range_error& e) {
            PyErr_SetString(PyExc_IndexError, e.what());
        } catch (const io_error& e) {
            PyErr_SetString(PyExc_OSError, e.what());
        }
    });

    m.def("lpal", &lpal, py::arg("w"));
    m.def("lpal_second", &lpal_second, py::arg("w"));
    m.def("ssp", [](const std::string& w) { return to_py_list(ssp(w)); }, py::arg("w"));
    m.def("spp", [](const std::string& w) { return to_py_list(spp(w)); }, py::arg("w"));
    m.def("sspg", [](const std::string& w) { return to_py_list(sspg(w)); }, py::arg("w"));
    m.def("group_counts", &group_counts, py::arg("w"));
    m.def("pi", [](const std::string& w) { return to_py(pi(w)); }, py::arg("w"));
    m.def("pal_match", &oracle::pal_match, py::arg("x"), py::arg("y"),
          "Brute-force pal-match test (inputs up to 2000 bytes).");
    m.def("naive_search", &oracle::naive_search, py::arg("text"), py::arg("pattern"),
          "Brute-force occurrence list (texts up to 2000 bytes).");

    py::class_<PalFmIndex>(m, "PalFmIndex")
        .def_static(
            "build",
            [](const std::string& text, std::size_t delta, bool force_large) {
                BuildOptions opt;
                opt.force_large = force_large;
                py::gil_scoped_release release;
                return PalFmIndex::build(text, delta, opt);
            },
            py::arg("text"), py::arg("delta") = 1, py::arg("force_large") = false)
        .def_static("deserialize", &from_image, py::arg("data"))
        .def_static(
            "load", [](const std::filesystem::path& p) { return load_index(p); }, py::arg("path"))
        .def("serialize", &image_of)
        .def(
            "save", [](const PalFmIndex& idx, const std::filesystem::path& p) { save_index(idx, p); },
            py::arg("path"))
        .def_property_readonly("n", &PalFmIndex::text_length)
        .def_property_readonly("rows", &PalFmIndex::rows)
        .def_property_readonly("delta", &PalFmIndex::delta)
        .def_property_readonly("max_group", &PalFmIndex::max_group)
        .def("count", &PalFmIndex::count, py::arg("pattern"))
        .def("locate", &PalFmIndex::locate, py::arg("pattern"))
        .def("find",
             [](const PalFmIndex& idx, const std::string& p) {
                 const auto iv = idx.find(p);
                 return std::make_pair(iv.b, iv.e);
             },
             py::arg("pattern"), "Row interval (b, e), empty when b > e.")
        .def("f", [](const PalFmIndex& idx, std::size_t r) { return to_py(idx.f(r)); }, py::arg("row"))
        .def("l", [](const PalFmIndex& idx, std::size_t r) { return to_py(idx.l(r)); }, py::arg("row"))
        .def("lf", &PalFmIndex::lf, py::arg("row"))
        .def("sa_access", &PalFmIndex::sa_access, py::arg("row"))
        .def("stats", &stats_dict)
        .def(
            "verify",
            [](const PalFmIndex& idx, const std::string& text) {
                const auto rep = verify(idx, text);
                py::dict d;
                py::list violations;
                for (const auto& v : rep.violations) {
                    violations.append(py::make_tuple(v.check, v.detail));
                }
                d["ok"] = rep.ok();
                d["violations"] = violations;
                d["passed"] = rep.passed;
                d["skipped"] = rep.skipped;
                return d;
            },
            py::arg("text"))
        .def("__len__", &PalFmIndex::rows)
        .def("__repr__", [](const PalFmIndex& idx) {
            return "<PalFmIndex n=" + std::to_string(idx.text_length()) + " K=" + std::to_string(idx.max_group()) +
                   " delta=" + std::to_string(idx.delta()) + ">";
        });
}
