#ifndef HYPLAB_HYPLAB_HPP
#define HYPLAB_HYPLAB_HPP

#include <hyplab/bigint.hpp>
#include <hyplab/error.hpp>
#include <hyplab/limits.hpp>
#include <hyplab/signed_permutation.hpp>
#include <hyplab/polynomial.hpp>
#include <hyplab/sturm.hpp>
#include <hyplab/series.hpp>
#include <hyplab/eulerian.hpp>
#include <hyplab/root_system.hpp>
#include <hyplab/alcoves.hpp>
#include <hyplab/xn_poset.hpp>
#include <hyplab/ehrhart.hpp>
#include <hyplab/identities.hpp>
#include <hyplab/limit_sp.hpp>
#include <hyplab/report.hpp>
#include <hyplab/suites.hpp>

#endif
