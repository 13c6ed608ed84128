#pragma once

#include "heffter/array.hpp"
#include "heffter/constructions.hpp"
#include "heffter/decomposition.hpp"
#include "heffter/embedding.hpp"
#include "heffter/errors.hpp"
#include "heffter/modular.hpp"
#include "heffter/oracle.hpp"
#include "heffter/verifier.hpp"
