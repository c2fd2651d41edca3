#ifndef EQUIGAME_JSON_IO_HPP
#define EQUIGAME_JSON_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "equigame/diversity.hpp"
#include "equigame/genmetric.hpp"
#include "equigame/lts.hpp"
#include "equigame/mdp.hpp"
#include "equigame/netecon.hpp"
#include "equigame/poset.hpp"
#include "equigame/separoid.hpp"
#include "equigame/vi.hpp"

// File formats. Readers throw ValidationError with messages naming the
// offending path and invariant; writers are deterministic so reruns with the
// same inputs produce byte-identical files.
namespace equigame::io {

using nlohmann::json;

// Affine VI problem {"n", "M", "q", "set": {"kind": "orthant"|"box", ...}}
// encoding F(x) = M x + q.
vi::VIProblem read_affine_vi(const json& j);
json write_affine_vi(const Eigen::MatrixXd& m, const Eigen::VectorXd& q,
                     const vi::FeasibleSet& set);

json write_solution(const vi::Solution& sol);
void write_trace_csv(std::ostream& os, const std::vector<double>& residuals);

// Economy models with polynomial cost terms {"var": "Q[1,1,1]", "pow": 2,
// "coef": 1.0}; constant terms omit "var". Indices are 1-based in files.
netecon::Model read_economy(const json& j);
json write_economy(const netecon::Model& model);

coalg::LTS read_lts(const json& j);
json write_lts(const coalg::LTS& lts);
coalg::StateRelation read_relation(const json& j, const coalg::LTS& a, const coalg::LTS& b);
json write_relation(const coalg::StateRelation& rel, const coalg::LTS& a, const coalg::LTS& b);
json write_bisim_check(const coalg::BisimCheck& check, const coalg::LTS& a, const coalg::LTS& b);

coalg::MDP read_mdp(const json& j);

// Environments: explicit tables, or builder strings "register:3" /
// "register:n=3".
diversity::MooreEnv read_env(const json& j);
diversity::MooreEnv parse_env_spec(const std::string& spec);
json write_diversity_automaton(const diversity::DiversityAutomaton& da,
                               const diversity::MooreEnv& env);

// Metric space {"points": [...], "d": [[...]]} with "INF" for infinity.
metric::GenMetricSpace read_space(const json& j);
json write_space(const metric::GenMetricSpace& space);

causal::Separoid read_separoid(const json& j);
std::pair<std::vector<std::string>, std::vector<double>> read_joint(const json& j);

// Genotype data: wide CSV (header = events, cells 0/1) or long-form
// (sample,event) pairs, detected from the header.
causal::GenotypeDataset read_genotypes_csv(std::istream& is, const std::string& filename);
json write_poset(const causal::DiscoveredPoset& poset);
std::string write_poset_dot(const causal::DiscoveredPoset& poset);

json load_json_file(const std::string& path);
void store_text_file(const std::string& path, const std::string& text);

}  // namespace equigame::io

#endif
