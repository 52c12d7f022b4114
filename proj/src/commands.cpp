#include "permlat/commands.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "permlat/brauer.hpp"
#include "permlat/cohomology.hpp"
#include "permlat/inputdoc.hpp"
#include "permlat/recognize.hpp"

namespace permlat {

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

void emit_structure(std::ostringstream& os, const Group& g, const PermStructure& st) {
    os << "structure\n";
    for (const auto& [sub, d] : st.mult) {
        if (d == 0) continue;
        os << "  class " << sub << " label " << g.subgroup_label(sub) << " order "
           << g.subgroup(sub).order() << " mult " << d << "\n";
    }
    os << "end\n";
}

void emit_header(std::ostringstream& os, const std::string& kind, const std::string& echo,
                 const std::string& path, const InputDocument& doc) {
    os << "report " << kind << "\n";
    os << "command " << echo << "\n";
    os << "input " << path << "\n";
    os << "ring " << doc.ring.to_string() << "\n";
    os << "group_order " << doc.group->order() << "\n";
}

// shared wrapper: parse/semantic failures exit 2, internal failures exit 3
CmdResult run_command(const std::function<CmdResult()>& body) {
    try {
        return body();
    } catch (const internal_error& e) {
        return CmdResult{3, "", std::string("internal error: ") + e.what() + "\n"};
    } catch (const value_error& e) {
        return CmdResult{2, "", std::string("error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return CmdResult{3, "", std::string("internal error: ") + e.what() + "\n"};
    }
}

}  // namespace

CmdResult cmd_info(const std::string& path) {
    return run_command([&]() {
        auto t0 = Clock::now();
        InputDocument doc = load_input(path);
        std::ostringstream os;
        emit_header(os, "info", "info", path, doc);
        os << "subgroup_count " << doc.group->subgroup_count() << "\n";
        os << "subgroup_class_count " << doc.group->subgroup_classes().size() << "\n";
        os << "center_order " << doc.group->center_elements().size() << "\n";
        for (const auto& name : doc.lattice_order) {
            const LatPtr& lat = doc.lattices.at(name);
            os << "lattice " << name << " rank " << lat->rank << " action_check ok\n";
        }
        for (const auto& name : doc.subgroup_order)
            os << "subgroup " << name << " index " << doc.subgroups.at(name) << " label "
               << doc.group->subgroup_label(doc.subgroups.at(name)) << " order "
               << doc.group->subgroup(doc.subgroups.at(name)).order() << "\n";
        os << "time_ms " << elapsed_ms(t0) << "\n";
        os << "end\n";
        return CmdResult{0, os.str(), ""};
    });
}

CmdResult cmd_subgroups(const std::string& path) {
    return run_command([&]() {
        auto t0 = Clock::now();
        InputDocument doc = load_input(path);
        const Group& g = *doc.group;
        std::ostringstream os;
        emit_header(os, "subgroups", "subgroups", path, doc);
        for (int i = 0; i < g.subgroup_count(); ++i) {
            os << "subgroup " << i << " label " << g.subgroup_label(i) << " order "
               << g.subgroup(i).order() << " normal " << (g.is_normal(i) ? "true" : "false")
               << " normalizer " << g.normalizer_of(i) << " class_rep " << g.class_rep_of(i)
               << "\n";
        }
        os << "class_count " << g.subgroup_classes().size() << "\n";
        os << "time_ms " << elapsed_ms(t0) << "\n";
        os << "end\n";
        return CmdResult{0, os.str(), ""};
    });
}

CmdResult cmd_brauer(const std::string& path, const std::string& lattice, const std::string& P) {
    return run_command([&]() {
        auto t0 = Clock::now();
        InputDocument doc = load_input(path);
        LatPtr lat = doc.lattice(lattice);
        int sub = doc.subgroup(P);
        LatticeCtx ctx(lat);
        BrauerModule up = brauer_quotient(ctx, sub, BrauerKind::Upper);
        BrauerModule dbl = brauer_quotient(ctx, sub, BrauerKind::Double);
        std::ostringstream os;
        emit_header(os, "brauer", "brauer --lattice " + lattice + " --subgroup " + P, path, doc);
        os << "lattice " << lattice << " rank " << lat->rank << "\n";
        os << "base_point " << sub << " label " << doc.group->subgroup_label(sub) << "\n";
        os << "w_order " << up.W->order() << "\n";
        os << "fixed_rank " << up.fixed_basis.rows() << "\n";
        os << "upper_dim " << up.dim << "\n";
        os << "double_dim " << dbl.dim << "\n";
        os << "head_dim " << head_dim(dbl) << "\n";
        for (int w = 0; w < dbl.W->order() && dbl.dim > 0; ++w)
            os << "double_action " << w << " " << matrix_token(dbl.waction[w]) << "\n";
        os << "time_ms " << elapsed_ms(t0) << "\n";
        os << "end\n";
        return CmdResult{0, os.str(), ""};
    });
}

CmdResult cmd_cover(const std::string& path, const std::string& lattice, unsigned seed) {
    return run_command([&]() {
        auto t0 = Clock::now();
        InputDocument doc = load_input(path);
        LatPtr lat = doc.lattice(lattice);
        CoverResult cov = permutation_cover(lat, seed);
        std::ostringstream os;
        emit_header(os, "cover",
                    "cover --lattice " + lattice + " --seed " + std::to_string(seed), path, doc);
        os << "lattice " << lattice << " rank " << lat->rank << "\n";
        emit_structure(os, *doc.group, cov.structure);
        os << "cover_rank " << cov.cover_module->rank << "\n";
        os << "kernel_rank " << cov.kernel.rows() << "\n";
        if (cov.cover_module->rank > 0 && lat->rank > 0)
            os << "theta " << matrix_token(cov.theta.f) << "\n";
        if (cov.kernel.rows() > 0) os << "kernel " << matrix_token(cov.kernel) << "\n";
        for (const auto& [sub, lifts] : cov.lifts)
            for (int i = 0; i < lifts.rows(); ++i)
                os << "lift " << sub << " " << i << " " << row_token(lifts.row_vec(i)) << "\n";
        os << "time_ms " << elapsed_ms(t0) << "\n";
        os << "end\n";
        return CmdResult{0, os.str(), ""};
    });
}

CmdResult cmd_recognize(const std::string& path, const std::string& lattice,
                        const std::string& method, unsigned seed) {
    return run_command([&]() {
        auto t0 = Clock::now();
        InputDocument doc = load_input(path);
        LatPtr lat = doc.lattice(lattice);
        PERMLAT_REQUIRE(method == "cover" || method == "cliffweiss",
                        "unknown method '" + method + "' (cover|cliffweiss)");
        std::ostringstream os;
        emit_header(os, "recognize",
                    "recognize --lattice " + lattice + " --method " + method + " --seed " +
                        std::to_string(seed),
                    path, doc);
        os << "lattice " << lattice << " rank " << lat->rank << "\n";
        RecognitionReport rep;
        if (method == "cover") {
            rep = recognize_permutation(lat, seed);
        } else {
            CliffWeissReport cw = cliff_weiss_recognize(lat);
            os << "coflasque " << (cw.coflasque_ok ? "true" : "false") << "\n";
            if (cw.coflasque_witness)
                os << "coflasque_witness " << *cw.coflasque_witness << " label "
                   << doc.group->subgroup_label(*cw.coflasque_witness) << "\n";
            os << "modp_permutation " << (cw.modp_ok ? "true" : "false") << "\n";
            rep = cw.report;
        }
        os << "verdict " << (rep.is_permutation ? "permutation" : "not-permutation") << "\n";
        if (rep.is_permutation) emit_structure(os, *doc.group, rep.structure);
        os << "kernel_rank " << rep.kernel.rows() << "\n";
        if (rep.kernel.rows() > 0) os << "kernel " << matrix_token(rep.kernel) << "\n";
        os << "time_ms " << elapsed_ms(t0) << "\n";
        os << "end\n";
        return CmdResult{rep.is_permutation ? 0 : 1, os.str(), ""};
    });
}

CmdResult cmd_weiss(const std::string& path, const std::string& lattice, const std::string& N) {
    return run_command([&]() {
        auto t0 = Clock::now();
        InputDocument doc = load_input(path);
        LatPtr lat = doc.lattice(lattice);
        int n = doc.subgroup(N);
        WeissReport rep = weiss_check(lat, n);
        std::ostringstream os;
        emit_header(os, "weiss", "weiss --lattice " + lattice + " --subgroup " + N, path, doc);
        os << "lattice " << lattice << " rank " << lat->rank << "\n";
        os << "subgroup " << n << " label " << doc.group->subgroup_label(n) << "\n";
        os << "hypothesis_1 " << (rep.hyp1_ok ? "ok" : "failed");
        if (rep.hypothesis_1) os << " free_rank " << rep.hypothesis_1->free_rank;
        os << "\n";
        os << "hypothesis_2 " << (rep.hyp2_ok ? "ok" : "failed") << "\n";
        if (rep.hyp2_ok) {
            os << "fixed_point_";
            emit_structure(os, *doc.group, rep.hypothesis_2.structure);
        }
        os << "status " << to_string(rep.status) << "\n";
        os << "conclusion "
           << (rep.conclusion.is_permutation ? "permutation" : "not-permutation") << "\n";
        if (rep.conclusion.is_permutation) emit_structure(os, *doc.group, rep.conclusion.structure);
        os << "time_ms " << elapsed_ms(t0) << "\n";
        os << "end\n";
        std::string err;
        int code = 0;
        switch (rep.status) {
            case WeissStatus::TheoremVerified: code = 0; break;
            case WeissStatus::HypothesisFailed: {
                code = 1;
                std::string which = !rep.hyp1_ok && !rep.hyp2_ok ? "1 and 2"
                                    : !rep.hyp1_ok              ? "1 (restriction to N not free)"
                                                                : "2 (U^N not permutation)";
                err = "hypothesis " + which + " failed\n";
                break;
            }
            case WeissStatus::TheoremViolated:
                code = 3;
                err = "BUG TRAP: both hypotheses hold but recognition failed; diagnostic dump:\n" +
                      std::string("  kernel rank ") + std::to_string(rep.conclusion.kernel.rows()) +
                      "\n  kernel " + matrix_token(rep.conclusion.kernel) + "\n";
                break;
        }
        return CmdResult{code, os.str(), err};
    });
}

CmdResult cmd_h1(const std::string& path, const std::string& lattice, const std::string& H) {
    return run_command([&]() {
        auto t0 = Clock::now();
        InputDocument doc = load_input(path);
        LatPtr lat = doc.lattice(lattice);
        int h = doc.subgroup(H);
        Presentation pr = h1(*lat, h);
        std::ostringstream os;
        emit_header(os, "h1", "h1 --lattice " + lattice + " --subgroup " + H, path, doc);
        os << "lattice " << lattice << " rank " << lat->rank << "\n";
        os << "subgroup " << h << " label " << doc.group->subgroup_label(h) << "\n";
        os << "factors " << row_token(pr.factors()) << "\n";
        os << "free_rank " << pr.free_rank << "\n";
        if (pr.discarded_prime_to_p) os << "prime_to_p_discarded true\n";
        os << "time_ms " << elapsed_ms(t0) << "\n";
        os << "end\n";
        return CmdResult{0, os.str(), ""};
    });
}

CmdResult cmd_mackey(const std::string& path, const std::string& lattice, const std::string& H,
                     const std::string& L) {
    return run_command([&]() {
        auto t0 = Clock::now();
        InputDocument doc = load_input(path);
        LatPtr lat = doc.lattice(lattice);
        int h = doc.subgroup(H), l = doc.subgroup(L);
        RestrictResult v = restrict_to(*lat, h);
        MackeyResult mk = mackey_decompose(*v.lat, doc.group, v.embed, l);
        std::ostringstream os;
        emit_header(os, "mackey",
                    "mackey --lattice " + lattice + " --subgroup " + H + " --subgroup2 " + L, path,
                    doc);
        os << "lattice " << lattice << " rank " << lat->rank << "\n";
        os << "subgroup_h " << h << " label " << doc.group->subgroup_label(h) << "\n";
        os << "subgroup_l " << l << " label " << doc.group->subgroup_label(l) << "\n";
        for (const auto& comp : mk.components)
            os << "component rep " << doc.group->label(comp.dc_rep) << " intersection "
               << doc.group->subgroup_label(comp.intersection) << " rank " << comp.component->rank
               << "\n";
        os << "induced_restricted_rank " << mk.target->rank << "\n";
        os << "iso_verified true\n";
        os << "time_ms " << elapsed_ms(t0) << "\n";
        os << "end\n";
        return CmdResult{0, os.str(), ""};
    });
}

}  // namespace permlat
