#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pgalois/partial_action.hpp"

namespace pgalois {

enum class BlockKind { field, dual_numbers, matrices };

struct GeneratorOptions {
  std::size_t max_dim = 6;
  std::vector<std::uint64_t> primes{2, 3, 5};
  bool allow_noncommutative = true;
};

/// A global action on S = K^m (G permuting the blocks, twisted by
/// automorphisms of K) restricted along a nonzero sum of block units.
struct RandomInstance {
  std::string description;
  BlockKind kind = BlockKind::field;
  std::size_t block_dim = 1;
  GlobalActionInstance global;
  Vec restriction;
  PartialAction action;
};

RandomInstance random_restricted_action(std::mt19937_64& rng, const GeneratorOptions& options = {});

struct Mutation {
  PartialAction action;
  std::size_t group_element = 0;
  std::string description;
};

/// Replaces alpha_s by alpha_s o gamma for a nontrivial automorphism gamma
/// of the domain ideal. Every other axiom survives, so only the
/// compatibility condition can fail. Returns nullopt when no twist breaks it.
std::optional<Mutation> mutate_compatibility(const RandomInstance& inst, std::mt19937_64& rng);

/// Draws instances until a mutation exists.
Mutation random_mutation(std::mt19937_64& rng, const GeneratorOptions& options = {});

std::vector<FiniteGroup> generator_groups();

}  // namespace pgalois
