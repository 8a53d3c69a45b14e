#pragma once

#include "snakecone/abelian_homology.hpp"
#include "snakecone/error.hpp"
#include "snakecone/group.hpp"
#include "snakecone/scenario.hpp"
#include "snakecone/sigma_word.hpp"
#include "snakecone/smith.hpp"
#include "snakecone/snake_pi1.hpp"
#include "snakecone/text.hpp"
