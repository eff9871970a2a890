#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scenforge/config.hpp"
#include "scenforge/mutation.hpp"
#include "scenforge/scenario_gen.hpp"

namespace scenforge::assembly {

struct TreeNode {
  int id = 0;
  int parent = -1;
  int depth = 0;
  bool pruned = false;
  scenario_gen::ScenarioDocument document;
  std::optional<mutation::BlockVariant> inserted;
  std::vector<int> children;
  std::string feature_key;  // filled by prune
};

struct ScenarioTree {
  scenario_gen::ScenarioTemplate root_template;
  std::vector<TreeNode> nodes;  // nodes[0] is the template-only root

  std::size_t non_root_count() const {
    return nodes.empty() ? 0 : nodes.size() - 1;
  }
  std::vector<int> leaves() const;
};

/// Discretized structural footprint: 5-bin numerics, symbolic groups and
/// behavior classes. Equal keys mean "same scenario category".
struct StructuralFeatures {
  std::vector<std::pair<std::string, std::string>> items;  // sorted by name
  std::string key() const;
};

struct BlockDelta {
  enum class Kind { None, BlockAdded, AttributeChanged, Divergent };
  Kind kind = Kind::None;
  mutation::BlockIdentity block;
  std::string details;
};

/// Closed-form tree size: sum over k of the product of the first k variant
/// counts.
std::uint64_t expected_count(const std::vector<int>& variant_counts);

/// Insert one block per slot into the template. Throws SlotConflict on a
/// duplicate identity or second weather block, InvalidOrder when an event
/// block arrives without its NPC definition.
scenario_gen::ScenarioDocument compose_full(
    const scenario_gen::ScenarioTemplate& tmpl,
    const std::vector<mutation::ScenarioBlock>& blocks);

/// Level-by-level growth in the fixed insertion order; every node document
/// is schema-validated. Non-root node count equals expected_count.
ScenarioTree grow_tree(
    const scenario_gen::ScenarioTemplate& tmpl,
    const std::vector<std::pair<mutation::ScenarioBlock,
                                std::vector<mutation::BlockVariant>>>& variants,
    const schema_model::SchemaGraph& schema);

StructuralFeatures feature_vector(const scenario_gen::ScenarioDocument& doc,
                                  const config::OperatorConfig& config);

/// Leaf-level diversity pruning: leaves cluster by identical features;
/// ceil(retention * size) survive per cluster (always at least one), chosen
/// with the seeded generator. Internal nodes without retained descendants
/// are marked pruned.
ScenarioTree prune(const ScenarioTree& tree, double retention,
                   std::uint64_t seed, const config::OperatorConfig& config);

/// Structural relation between two documents: block_added for parent/child
/// pairs, attribute_changed for siblings sharing element structure,
/// divergent otherwise.
BlockDelta diff_derivation(const scenario_gen::ScenarioDocument& parent,
                           const scenario_gen::ScenarioDocument& child);

/// Uniform 5-bin index used by feature discretization; values clamp into
/// [0, bins-1].
int bin_index(double value, double lower, double upper, int bins);

/// One directory per tree: node_<id>.xosc plus a tree.json manifest with
/// parent links, inserted-block provenance and pruned flags.
void save_tree(const ScenarioTree& tree, const std::filesystem::path& dir,
               std::uint64_t root_seed, double retention);

}  // namespace scenforge::assembly
