#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fourcycle/canonical.hpp"
#include "fourcycle/classify.hpp"
#include "fourcycle/construct.hpp"
#include "fourcycle/detect.hpp"
#include "fourcycle/growth.hpp"
#include "fourcycle/solve.hpp"
#include "fourcycle/tripartition.hpp"
#include "fourcycle/triple_system.hpp"

namespace py = pybind11;
using namespace fourcycle;

namespace {

PatternClass cls_arg(const std::string& name) {
    auto c = pattern_from_name(name);
    if (!c) throw std::invalid_argument("unknown pattern class: " + name);
    return *c;
}

FamilySubset family_arg(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) {
        auto fam = FamilySubset::parse(obj.cast<std::string>());
        if (!fam) throw std::invalid_argument("cannot parse family: " + obj.cast<std::string>());
        return *fam;
    }
    FamilySubset fam;
    for (const auto& item : obj.cast<py::iterable>())
        fam = fam.with(cls_arg(item.cast<std::string>()));
    return fam;
}

std::vector<std::string> family_names(FamilySubset fam) {
    std::vector<std::string> out;
    for (PatternClass c : fam.members()) out.push_back(pattern_name(c));
    return out;
}

py::dict embedding_dict(const Embedding& e) {
    py::dict d;
    d["base"] = e.base;
    d["apex"] = e.apex;
    d["cls"] = pattern_name(e.cls);
    py::list blocks;
    for (const auto& [block, w] : e.apex_by_block()) blocks.append(py::make_tuple(block, w));
    d["blocks"] = blocks;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "triple systems, special four-cycle detection, exact Turán numbers";

    py::class_<TripleSystem>(m, "TripleSystem")
        .def(py::init([](int n, const std::vector<std::vector<int>>& triples) {
                 std::vector<Triple> ts;
                 for (const auto& t : triples) {
                     if (t.size() != 3) throw std::invalid_argument("triples need 3 vertices");
                     ts.push_back(sorted_triple(t[0], t[1], t[2]));
                 }
                 return TripleSystem(n, std::move(ts));
             }),
             py::arg("n"), py::arg("triples"))
        .def_property_readonly("n", &TripleSystem::vertex_count)
        .def_property_readonly("triples",
                               [](const TripleSystem& h) {
                                   std::vector<std::tuple<int, int, int>> out;
                                   for (const Triple& t : h.triples())
                                       out.emplace_back(t[0], t[1], t[2]);
                                   return out;
                               })
        .def("contains",
             [](const TripleSystem& h, int a, int b, int c) {
                 return h.contains(sorted_triple(a, b, c));
             })
        .def("__len__", &TripleSystem::triple_count)
        .def("__eq__", [](const TripleSystem& a, const TripleSystem& b) { return a == b; })
        .def("__repr__", [](const TripleSystem& h) {
            std::ostringstream ss;
            ss << "TripleSystem(n=" << h.vertex_count() << ", edges=" << h.triple_count() << ")";
            return ss.str();
        });

    m.def("shell", [](const TripleSystem& h, int u, int v) { return shell(h, u, v).vertices; });
    m.def("read_system", &read_system_file, py::arg("path"), py::arg("merge_duplicates") = false);
    m.def("write_system", &write_system_file, py::arg("system"), py::arg("path"));
    m.def("to_tsys", &to_tsys);

    m.def("pattern_catalog", [] {
        py::list out;
        for (const ApexPattern& pat : pattern_catalog()) {
            py::dict d;
            d["cls"] = pattern_name(pat.class_id);
            d["partition"] = pat.partition;
            d["config_vertices"] = pat.config_vertices();
            out.append(d);
        }
        return out;
    });
    m.def("classify_partition",
          [](const SlotPartition& p) { return pattern_name(classify_partition(p)); });
    m.def("pattern_configuration",
          [](const std::string& cls) { return pattern_configuration(cls_arg(cls)); });

    m.def(
        "tripartition",
        [](const TripleSystem& h, uint64_t seed) {
            Tripartition t = tripartition(h, seed);
            return py::make_tuple(t.classes, t.sub);
        },
        py::arg("system"), py::arg("seed") = 0);

    m.def(
        "find_embeddings",
        [](const TripleSystem& h, const std::string& cls, std::optional<int> limit) {
            py::list out;
            for (const Embedding& e : find_embeddings(h, cls_arg(cls), limit))
                out.append(embedding_dict(e));
            return out;
        },
        py::arg("system"), py::arg("cls"), py::arg("limit") = py::none());

    m.def("profile", [](const TripleSystem& h) {
        Profile p = profile(h);
        py::dict d;
        d["present"] = family_names(p.present);
        py::dict wit;
        for (PatternClass c : p.present.members())
            wit[py::str(pattern_name(c))] = embedding_dict(*p.witness_for(c));
        d["witness"] = wit;
        return d;
    });
    m.def("is_free",
          [](const TripleSystem& h, const py::object& fam) { return is_free(h, family_arg(fam)); });
    m.def("has_berge_c4", &has_berge_c4);
    m.def("check_sparsity", &check_sparsity, py::arg("system"), py::arg("v"), py::arg("e"));

    m.def("star", &star);
    m.def("tripartite_matching", &tripartite_matching);
    m.def("behrend_set", &behrend_set);
    m.def("ruzsa_szemeredi", &ruzsa_szemeredi);
    m.def("projective_sts", &projective_sts);
    m.def(
        "anti_pasch_sts",
        [](int n, uint64_t budget) {
            AntiPaschResult r = anti_pasch_sts(n, budget);
            py::dict d;
            d["system"] = r.system ? py::cast(*r.system) : py::none();
            d["nodes"] = r.nodes;
            d["exhausted"] = r.exhausted;
            return d;
        },
        py::arg("n"), py::arg("budget") = kDefaultAntiPaschBudget);
    m.def("rodl_phelps", &rodl_phelps);
    m.def("girth5_greedy", &girth5_greedy, py::arg("n"), py::arg("seed") = 0);

    auto solve_dict = [](const SolveResult& r) {
        py::dict d;
        d["n"] = r.n;
        d["family"] = family_names(r.family);
        d["value"] = r.value;
        d["witness"] = r.witness;
        d["nodes"] = r.nodes;
        d["mode"] = r.mode == SolveMode::brute_force ? "brute" : "exact";
        d["complete"] = r.complete;
        return d;
    };
    m.def(
        "turan_bruteforce",
        [solve_dict](int n, const py::object& fam) {
            return solve_dict(turan_bruteforce(n, family_arg(fam)));
        },
        py::arg("n"), py::arg("family"));
    m.def(
        "turan_exact",
        [solve_dict](int n, const py::object& fam, uint64_t budget, int threads, bool isomorph) {
            SolveOptions opts;
            opts.node_budget = budget;
            opts.threads = threads;
            opts.isomorph_reject = isomorph;
            return solve_dict(turan_exact(n, family_arg(fam), opts));
        },
        py::arg("n"), py::arg("family"), py::arg("budget") = SolveOptions{}.node_budget,
        py::arg("threads") = 1, py::arg("isomorph_reject") = false);

    m.def("fold_outs", &fold_outs);
    m.def("is_fold_out", &is_fold_out, py::arg("g1"), py::arg("g"));
    m.def("foldout_bound", &foldout_bound, py::arg("ex_g_at_n"), py::arg("v_g"), py::arg("n"));
    m.def("is_isomorphic", &is_isomorphic);
    m.def("canonical_form", &canonical_form);

    m.def("classify_subset", [](const py::object& fam) {
        ClassificationStatus row = classify_subset(family_arg(fam));
        py::dict d;
        d["subset"] = family_names(row.subset);
        d["status"] = status_name(row.status);
        d["rule"] = rule_name(row.rule);
        d["lower"] = row.lower.to_string();
        d["upper"] = row.upper.to_string();
        d["open_group"] = row.open_group;
        d["notes"] = row.notes;
        return d;
    });
    m.def("classification_histogram", [] {
        ClassificationTable table = classification_table();
        auto hist = table.status_histogram();
        py::dict d;
        d["ALL_TRIPLES"] = hist[0];
        d["THETA_N_3_2"] = hist[1];
        d["THETA_N_5_2"] = hist[2];
        d["THETA_N_2"] = hist[3];
        d["OPEN"] = hist[4];
        return d;
    });

    m.def("fit_exponent", [](const std::vector<std::pair<double, double>>& pts) {
        FitResult f = fit_exponent(pts);
        return py::make_tuple(f.slope, f.intercept, f.rms_residual);
    });
}
