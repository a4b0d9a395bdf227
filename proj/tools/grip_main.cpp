// grip: planar tendon-driven gripper toolkit.
// Subcommands: workspace, statics, invdyn, simulate, verify.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "grip/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Planar tendon-driven gripper toolkit: kinematic sweeps, tendon "
                 "statics, inverse dynamics, simulation, and oracle cross-checks."};
    app.require_subcommand(1);

    std::string hand_path;
    std::string finger = "finger1";
    std::string out_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--hand", hand_path, "hand config JSON")->required();
        cmd->add_option("--finger", finger, "finger name (default finger1)");
        cmd->add_option("--out", out_path,
                        "output CSV path, '-' for stdout (default <command>_<finger>.csv)");
    };

    double min_deg = 0.0, max_deg = 90.0;
    std::size_t steps = 91;
    CLI::App* ws = app.add_subcommand("workspace", "fingertip sweep over equal joint angles");
    add_common(ws);
    ws->add_option("--min-deg", min_deg, "sweep start, degrees (default 0)");
    ws->add_option("--max-deg", max_deg, "sweep end, degrees (default 90)");
    ws->add_option("--steps", steps, "number of rows, endpoints included (default 91)");

    double force = 6.0;
    int n_fingers = 3;
    CLI::App* st = app.add_subcommand("statics", "tendon force chain report");
    add_common(st);
    st->add_option("--force", force, "fingertip grip force, N (default 6)");
    st->add_option("--n-fingers", n_fingers, "fingers sharing the payload (default 3)");

    std::string state_path;
    CLI::App* id = app.add_subcommand("invdyn", "joint torques for given motion rows");
    add_common(id);
    id->add_option("--state", state_path, "CSV of theta/omega/alpha rows (radians)")
        ->required();

    std::string program = "zero";
    double duration = 1.0, dt = 1e-4;
    std::string theta0, omega0;
    CLI::App* sim = app.add_subcommand("simulate", "fixed-step RK4 rollout");
    add_common(sim);
    sim->add_option("--program", program,
                    "torque program: zero | gravity_comp | constant:<v,..> | hold:<a,..>");
    sim->add_option("--duration", duration, "seconds (default 1)");
    sim->add_option("--dt", dt, "step, seconds (default 1e-4)");
    sim->add_option("--theta0", theta0, "initial angles, rad, comma-separated (default 0)");
    sim->add_option("--omega0", omega0, "initial rates, rad/s, comma-separated (default 0)");

    std::size_t samples = 1000;
    std::uint64_t seed = 1;
    CLI::App* vf = app.add_subcommand("verify", "closed form vs finite-difference oracle");
    add_common(vf);
    vf->add_option("--samples", samples, "random states to draw (default 1000)");
    vf->add_option("--seed", seed, "RNG seed (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }

    grip::CommandOutcome outcome;
    if (ws->parsed())
        outcome = grip::cmd_workspace(hand_path, finger, min_deg, max_deg, steps, out_path);
    else if (st->parsed())
        outcome = grip::cmd_statics(hand_path, finger, force, n_fingers, out_path);
    else if (id->parsed())
        outcome = grip::cmd_invdyn(hand_path, finger, state_path, out_path);
    else if (sim->parsed())
        outcome = grip::cmd_simulate(hand_path, finger, program, duration, dt, out_path,
                                     theta0, omega0);
    else
        outcome = grip::cmd_verify(hand_path, finger, samples, seed, out_path);

    if (outcome.exit_code != 0 && !outcome.message.empty())
        std::cerr << outcome.message << '\n';
    return outcome.exit_code;
}
