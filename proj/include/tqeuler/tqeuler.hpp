#pragma once

#include <tqeuler/cfrac.hpp>
#include <tqeuler/combinat/alternating.hpp>
#include <tqeuler/combinat/caps.hpp>
#include <tqeuler/combinat/configs.hpp>
#include <tqeuler/combinat/dyck.hpp>
#include <tqeuler/combinat/lattice_paths.hpp>
#include <tqeuler/combinat/partition.hpp>
#include <tqeuler/error.hpp>
#include <tqeuler/formulas/euler.hpp>
#include <tqeuler/formulas/lemmas.hpp>
#include <tqeuler/formulas/tk.hpp>
#include <tqeuler/formulas/zeng.hpp>
#include <tqeuler/json.hpp>
#include <tqeuler/laurent_poly.hpp>
#include <tqeuler/qkit.hpp>
#include <tqeuler/rational.hpp>
#include <tqeuler/series.hpp>
#include <tqeuler/verify.hpp>
