#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "permlat/brauer.hpp"
#include "permlat/cohomology.hpp"
#include "permlat/inputdoc.hpp"
#include "permlat/recognize.hpp"

namespace py = pybind11;
using namespace permlat;

namespace {

py::dict structure_dict(const Group& g, const PermStructure& st) {
    py::dict d;
    for (const auto& [sub, m] : st.mult)
        if (m > 0) d[py::str(g.subgroup_label(sub))] = m;
    return d;
}

struct PyDocument {
    InputDocument doc;

    static PyDocument from_text(const std::string& text) { return PyDocument{parse_input(text)}; }
    static PyDocument from_file(const std::string& path) { return PyDocument{load_input(path)}; }

    py::dict info() const {
        py::dict d;
        d["prime"] = doc.ring.p;
        d["ring"] = doc.ring.to_string();
        d["group_order"] = doc.group->order();
        d["subgroup_count"] = doc.group->subgroup_count();
        d["subgroup_class_count"] = doc.group->subgroup_classes().size();
        py::dict lats;
        for (const auto& [name, lat] : doc.lattices) lats[py::str(name)] = lat->rank;
        d["lattices"] = lats;
        py::list subs;
        for (const auto& name : doc.subgroup_order) subs.append(name);
        d["subgroups"] = subs;
        return d;
    }

    py::list subgroups() const {
        py::list out;
        const Group& g = *doc.group;
        for (int i = 0; i < g.subgroup_count(); ++i) {
            py::dict d;
            d["index"] = i;
            d["label"] = g.subgroup_label(i);
            d["order"] = g.subgroup(i).order();
            d["normal"] = g.is_normal(i);
            d["class_rep"] = g.class_rep_of(i);
            out.append(d);
        }
        return out;
    }

    py::dict brauer(const std::string& lattice, const std::string& P) const {
        LatPtr lat = doc.lattice(lattice);
        int sub = doc.subgroup(P);
        LatticeCtx ctx(lat);
        BrauerModule up = brauer_quotient(ctx, sub, BrauerKind::Upper);
        BrauerModule dbl = brauer_quotient(ctx, sub, BrauerKind::Double);
        py::dict d;
        d["fixed_rank"] = up.fixed_basis.rows();
        d["upper_dim"] = up.dim;
        d["double_dim"] = dbl.dim;
        d["head_dim"] = head_dim(dbl);
        d["w_order"] = up.W->order();
        return d;
    }

    py::dict cover(const std::string& lattice, unsigned seed) const {
        LatPtr lat = doc.lattice(lattice);
        CoverResult cov = permutation_cover(lat, seed);
        py::dict d;
        d["structure"] = structure_dict(*doc.group, cov.structure);
        d["cover_rank"] = cov.cover_module->rank;
        d["kernel_rank"] = cov.kernel.rows();
        return d;
    }

    py::dict recognize(const std::string& lattice, const std::string& method) const {
        LatPtr lat = doc.lattice(lattice);
        py::dict d;
        RecognitionReport rep;
        if (method == "cliffweiss") {
            CliffWeissReport cw = cliff_weiss_recognize(lat);
            d["coflasque"] = cw.coflasque_ok;
            d["modp_permutation"] = cw.modp_ok;
            rep = cw.report;
        } else {
            rep = recognize_permutation(lat);
        }
        d["is_permutation"] = rep.is_permutation;
        if (rep.is_permutation) d["structure"] = structure_dict(*doc.group, rep.structure);
        d["kernel_rank"] = rep.kernel.rows();
        return d;
    }

    py::dict weiss(const std::string& lattice, const std::string& N) const {
        WeissReport rep = weiss_check(doc.lattice(lattice), doc.subgroup(N));
        py::dict d;
        d["hypothesis_1"] = rep.hyp1_ok;
        d["hypothesis_2"] = rep.hyp2_ok;
        d["status"] = to_string(rep.status);
        d["conclusion_is_permutation"] = rep.conclusion.is_permutation;
        if (rep.conclusion.is_permutation)
            d["structure"] = structure_dict(*doc.group, rep.conclusion.structure);
        return d;
    }

    py::list h1_factors(const std::string& lattice, const std::string& H) const {
        Presentation pr = h1(*doc.lattice(lattice), doc.subgroup(H));
        py::list out;
        for (const auto& f : pr.factors()) out.append(f.convert_to<long long>());
        return out;
    }

    py::dict mackey(const std::string& lattice, const std::string& H, const std::string& L) const {
        LatPtr lat = doc.lattice(lattice);
        RestrictResult v = restrict_to(*lat, doc.subgroup(H));
        MackeyResult mk = mackey_decompose(*v.lat, doc.group, v.embed, doc.subgroup(L));
        py::dict d;
        py::list comps;
        for (const auto& c : mk.components) {
            py::dict e;
            e["rep"] = doc.group->label(c.dc_rep);
            e["intersection"] = doc.group->subgroup_label(c.intersection);
            e["rank"] = c.component->rank;
            comps.append(e);
        }
        d["components"] = comps;
        d["rank"] = mk.target->rank;
        d["iso_verified"] = true;
        return d;
    }
};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact permutation-lattice tools for finite p-groups";

    py::register_exception<value_error>(m, "ValueError2", PyExc_ValueError);
    py::register_exception<internal_error>(m, "InternalError", PyExc_RuntimeError);

    py::class_<PyDocument>(m, "Document")
        .def_static("from_text", &PyDocument::from_text, py::arg("text"))
        .def_static("from_file", &PyDocument::from_file, py::arg("path"))
        .def("info", &PyDocument::info)
        .def("subgroups", &PyDocument::subgroups)
        .def("brauer", &PyDocument::brauer, py::arg("lattice"), py::arg("subgroup"))
        .def("cover", &PyDocument::cover, py::arg("lattice"), py::arg("seed") = 0)
        .def("recognize", &PyDocument::recognize, py::arg("lattice"),
             py::arg("method") = "cover")
        .def("weiss", &PyDocument::weiss, py::arg("lattice"), py::arg("subgroup"))
        .def("h1", &PyDocument::h1_factors, py::arg("lattice"), py::arg("subgroup"))
        .def("mackey", &PyDocument::mackey, py::arg("lattice"), py::arg("subgroup_h"),
             py::arg("subgroup_l"));
}
