#pragma once

#include "caweave/bitvec.hpp"
#include "caweave/ca102.hpp"
#include "caweave/ca9150.hpp"
#include "caweave/ca_engine.hpp"
#include "caweave/error.hpp"
#include "caweave/gf2field.hpp"
#include "caweave/gf2poly.hpp"
#include "caweave/interleave.hpp"
#include "caweave/ledger.hpp"
#include "caweave/sequence.hpp"
