#ifndef POWERIDEAL_POWERIDEAL_HPP
#define POWERIDEAL_POWERIDEAL_HPP

#include <powerideal/cas_export.hpp>
#include <powerideal/exact_rank.hpp>
#include <powerideal/graded_rank.hpp>
#include <powerideal/graph.hpp>
#include <powerideal/ideal.hpp>
#include <powerideal/involution.hpp>
#include <powerideal/series.hpp>
#include <powerideal/standard_monomials.hpp>
#include <powerideal/subgraphs.hpp>
#include <powerideal/subset.hpp>
#include <powerideal/verify.hpp>

#endif
