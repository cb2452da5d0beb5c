// pptool: command-line front end for the ppt library.
//
// Exit status: 0 ok, 1 verification failure, 2 parse/usage error,
// 3 mathematical precondition violation (singular pivot block etc).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <ppt/ppt.hpp>

namespace {

constexpr int exit_verification = 1;
constexpr int exit_usage = 2;
constexpr int exit_precondition = 3;

// A graph file is accepted wherever a matrix is: its adjacency matrix over f2.
ppt::AnyMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ppt::parse_error("cannot open matrix file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    std::vector<std::string> first;
    std::istringstream probe(text.str());
    if (ppt::detail::next_tokens(probe, first) && first.size() == 1 && first[0] == "graph")
        return ppt::parse_graph(text.str()).adjacency();
    return ppt::parse_matrix(text.str());
}

ppt::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ppt::parse_error("cannot open graph file '" + path + "'");
    return ppt::parse_graph(in);
}

const ppt::Domain& domain_of(const ppt::AnyMatrix& m) {
    return std::visit([](const auto& a) -> const ppt::Domain& { return a.domain(); }, m);
}

std::string join_letters(const std::vector<std::string>& letters) {
    const bool single = std::all_of(letters.begin(), letters.end(), [](const auto& l) { return l.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (!single && i > 0) out += ' ';
        out += letters[i];
    }
    return out;
}

std::string edge_summary(const ppt::Graph& g) {
    std::string out;
    for (const auto& [u, v] : g.edges()) {
        if (!out.empty()) out += ' ';
        out += u == v ? ppt::format_label_set(g.domain(), ppt::bit(u))
                      : ppt::format_label_set(g.domain(), ppt::bit(u) | ppt::bit(v));
    }
    return out.empty() ? "(no edges)" : out;
}

struct Options {
    std::string matrix, graph, dos, on, subset, flip, method = "direct", prop, field = "f2";
    bool norm_only = false;
    std::size_t trials = 100, size = 8;
    std::uint64_t seed = 1;
};

int cmd_pivot(const Options& o, std::ostream& out) {
    const auto m = load_matrix(o.matrix);
    const auto x = ppt::parse_label_list(domain_of(m), o.on);
    out << std::visit([&](const auto& a) { return ppt::format_matrix(ppt::pivot(a, x)); }, m);
    return 0;
}

int cmd_nullity(const Options& o, std::ostream& out) {
    const auto m = load_matrix(o.matrix);
    const auto& d = domain_of(m);
    const ppt::mask_t s = o.subset.empty() ? d.full() : ppt::parse_label_list(d, o.subset).bits();
    out << std::visit([&](const auto& a) { return ppt::principal_nullity(a, s); }, m) << '\n';
    return 0;
}

int cmd_pseq(const Options& o, std::ostream& out) {
    const auto m = load_matrix(o.matrix);
    out << std::visit(
        [&](const auto& a) { return ppt::format_partition_sequence(ppt::partition_sequence_of(a), o.norm_only); }, m);
    return 0;
}

int cmd_interlace(const Options& o, std::ostream& out) {
    const auto g = load_graph(o.graph);
    if (o.method == "recursive") {
        const auto q = ppt::q_recursive(g);
        out << "q': " << ppt::q_prime_from_q(q).coefficient_list() << '\n';
        out << "q: " << q.coefficient_list() << '\n';
        return 0;
    }
    const auto qp = ppt::q_prime_direct(g.adjacency());
    const auto q = ppt::q_from_q_prime(qp);
    out << "q': " << qp.coefficient_list() << '\n';
    out << "q: " << q.coefficient_list() << '\n';
    if (o.method == "both") {
        const auto rec = ppt::q_recursive(g);
        if (!(rec == q)) {
            out << "methods disagree: recursive q: " << rec.coefficient_list() << '\n';
            return exit_verification;
        }
        out << "direct and recursive agree\n";
    }
    return 0;
}

int cmd_overlap(const Options& o, std::ostream& out) {
    out << ppt::format_graph(ppt::overlap_graph(ppt::DoubleOccurrenceString::parse(o.dos)));
    return 0;
}

int cmd_walks(const Options& o, std::ostream& out) {
    const auto s = ppt::DoubleOccurrenceString::parse(o.dos);
    const auto x = ppt::parse_label_list(s.alphabet(), o.flip);
    const auto part = ppt::trace_partition(s, x);
    out << "walks: " << part.size() << '\n';
    for (const auto& w : part.walks) out << "  " << join_letters(ppt::walk_letters(s, w)) << '\n';
    const auto check = ppt::cohn_lempel_check(s, x);
    out << "n(O_s[X]) + 1 = " << check.nullity_plus_one << (check.equal() ? " (agrees)" : " (DISAGREES)") << '\n';
    return check.equal() ? 0 : exit_verification;
}

int cmd_distribution(const Options& o, std::ostream& out) {
    const auto s = ppt::DoubleOccurrenceString::parse(o.dos);
    const auto dist = ppt::walk_distribution(s);
    const auto expected = ppt::norm(ppt::partition_sequence_of(ppt::overlap_graph(s).adjacency()));
    out << "distribution: " << ppt::format_norm(dist) << '\n';
    out << "norm of overlap graph: " << ppt::format_norm(expected) << (dist == expected ? " (agrees)" : " (DISAGREES)")
        << '\n';
    return dist == expected ? 0 : exit_verification;
}

int cmd_orbit(const Options& o, std::ostream& out) {
    const auto g = load_graph(o.graph);
    const auto orbit = ppt::pivot_orbit(g);
    out << "graphs: " << orbit.graphs.size() << '\n';
    for (std::size_t i = 0; i < orbit.graphs.size(); ++i)
        out << "G" << i << (orbit.graphs[i] == g ? " (input)" : "") << ": " << edge_summary(orbit.graphs[i]) << '\n';
    out << "moves: " << orbit.moves.size() << '\n';
    for (const auto& m : orbit.moves)
        out << "G" << m.from << " * " << ppt::format_label_set(g.domain(), m.on) << " = G" << m.to << '\n';
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto prop = ppt::parse_property(o.prop);
    if (!prop) throw ppt::parse_error("unknown property '" + o.prop + "'");
    const auto field = o.field == "q" ? ppt::Field::q : ppt::Field::f2;
    const auto counts = ppt::run_property(*prop, o.trials, o.size, o.seed, field);
    out << counts.passed << '/' << o.trials << " pass";
    if (counts.failed) out << ", " << counts.failed << " fail";
    out << '\n';
    return counts.failed ? exit_verification : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Principal pivot transform toolkit"};
    app.require_subcommand(1);
    Options o;

    auto* pivot = app.add_subcommand("pivot", "Pivot a matrix on a set of labels");
    pivot->add_option("--matrix", o.matrix, "Matrix file")->required();
    pivot->add_option("--on", o.on, "Comma-separated labels")->required();

    auto* nullity = app.add_subcommand("nullity", "Nullity of a principal submatrix");
    nullity->add_option("--matrix", o.matrix, "Matrix file")->required();
    nullity->add_option("--subset", o.subset, "Comma-separated labels (default: all)");

    auto* pseq = app.add_subcommand("pseq", "Partition sequence by nullity");
    pseq->add_option("--matrix", o.matrix, "Matrix file")->required();
    pseq->add_flag("--norm-only", o.norm_only, "Print only the norm");

    auto* interlace = app.add_subcommand("interlace", "Interlace polynomial of a graph");
    interlace->add_option("--graph", o.graph, "Graph file")->required();
    interlace->add_option("--method", o.method, "direct, recursive or both")
        ->check(CLI::IsMember({"direct", "recursive", "both"}));

    auto* overlap = app.add_subcommand("overlap", "Overlap graph of a double occurrence string");
    overlap->add_option("--dos", o.dos, "Double occurrence string")->required();

    auto* walks = app.add_subcommand("walks", "Closed walks induced by flipping transitions");
    walks->add_option("--dos", o.dos, "Double occurrence string")->required();
    walks->add_option("--flip", o.flip, "Comma-separated letters")->required();

    auto* distribution = app.add_subcommand("distribution", "Walk-count distribution over all subsets");
    distribution->add_option("--dos", o.dos, "Double occurrence string")->required();

    auto* orbit = app.add_subcommand("orbit", "Pivot orbit under elementary pivots");
    orbit->add_option("--graph", o.graph, "Graph file")->required();

    auto* verify = app.add_subcommand("verify", "Randomized property check");
    verify->add_option("--prop", o.prop, "Property")
        ->required()
        ->check(CLI::IsMember({"nullity-invariance", "tucker", "partial-inverse", "twist", "recursion", "cohn-lempel"}));
    verify->add_option("--trials", o.trials, "Number of trials");
    verify->add_option("--size", o.size, "Largest domain size")->check(CLI::Range(1, static_cast<int>(ppt::max_enumeration_size)));
    verify->add_option("--seed", o.seed, "Generator seed");
    verify->add_option("--field", o.field, "f2 or q")->check(CLI::IsMember({"f2", "q"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    std::ostringstream out;
    int status = 0;
    try {
        if (*pivot) status = cmd_pivot(o, out);
        else if (*nullity) status = cmd_nullity(o, out);
        else if (*pseq) status = cmd_pseq(o, out);
        else if (*interlace) status = cmd_interlace(o, out);
        else if (*overlap) status = cmd_overlap(o, out);
        else if (*walks) status = cmd_walks(o, out);
        else if (*distribution) status = cmd_distribution(o, out);
        else if (*orbit) status = cmd_orbit(o, out);
        else if (*verify) status = cmd_verify(o, out);
    } catch (const ppt::precondition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_precondition;
    } catch (const ppt::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ppt::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ppt::capacity_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    std::cout << out.str();
    return status;
}
