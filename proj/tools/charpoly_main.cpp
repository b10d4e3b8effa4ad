// Command line front end: graph-indexed polytopes, lattices, verdicts, and
// the verification suite.

#include <CLI11.hpp>

#include "charpoly/charpoly.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for graph-indexed reflexive polytopes"};
    app.require_subcommand(1);

    charpoly::RunConfig cfg;

    auto add_common = [&](CLI::App* sub, bool needs_graph) {
        if (needs_graph)
            sub->add_option("--graph", cfg.graph,
                            "builtin name (dumbbell|theta|k4|rattle|star3|petersen|k33) or file")
                ->required();
        sub->add_option("--tree", cfg.tree_spec, "comma-separated edge ids, or 'all'");
        sub->add_option("--output", cfg.output, "write the artifact here instead of stdout");
        sub->add_option("--format", cfg.format, "json or table")->capture_default_str();
        sub->add_option("--workers", cfg.workers, "worker threads (CHARPOLY_WORKERS overrides 0)");
        sub->add_option("--point-cap", cfg.point_cap, "lattice enumeration cap")
            ->capture_default_str();
    };
    auto add_polytope = [&](CLI::App* sub) {
        sub->add_option("--polytope", cfg.polytope, "P, Q, 3P, or delta")->capture_default_str();
        sub->add_flag_callback(
            "--no-leaf-nonneg", [&] { cfg.leaf_nonneg = false; },
            "delta: drop the leaf-edge nonnegativity rows");
    };

    auto* build = app.add_subcommand("build", "emit an inequality description");
    add_common(build, true);
    add_polytope(build);

    auto* verts = app.add_subcommand("vertices", "enumerate exact vertices");
    add_common(verts, true);
    add_polytope(verts);

    auto* lp = app.add_subcommand("lattice-points", "enumerate lattice points");
    add_common(lp, true);
    add_polytope(lp);

    auto* refl = app.add_subcommand("reflexive", "decide reflexivity of Q");
    add_common(refl, true);

    auto* idp = app.add_subcommand("idp", "integer decomposition check for P");
    add_common(idp, true);
    idp->add_option("--k-max", cfg.k_max, "largest dilate to check")->capture_default_str();

    auto* rays = app.add_subcommand("rays", "divisor ray generators");
    add_common(rays, true);
    rays->add_option("--kind", cfg.ray_kind, "anticanonical or dual-cone")
        ->capture_default_str();

    auto* classify = app.add_subcommand("classify", "all pairs of a genus, with verdicts");
    add_common(classify, false);
    classify->add_option("--genus", cfg.genus, "first Betti number, 2..4")->required();
    classify->add_option("--k-max", cfg.k_max, "IDP depth when enabled")->capture_default_str();
    classify->add_flag("--stretch", cfg.stretch, "allow genus 5");

    auto* verify = app.add_subcommand("verify-paper", "run the whole verification suite");
    add_common(verify, false);
    verify->add_flag("--stretch", cfg.stretch, "include the Petersen run");
    verify->add_option("--budget-seconds", cfg.budget_seconds, "stretch time budget")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    return charpoly::run(cfg);
}
