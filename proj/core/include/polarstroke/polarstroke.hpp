#pragma once

#include <polarstroke/auditor.hpp>
#include <polarstroke/cusps.hpp>
#include <polarstroke/diffgeo.hpp>
#include <polarstroke/error.hpp>
#include <polarstroke/intervals.hpp>
#include <polarstroke/path.hpp>
#include <polarstroke/point.hpp>
#include <polarstroke/tessellator.hpp>
