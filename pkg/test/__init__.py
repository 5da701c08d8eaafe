# Test package for laxfrac
