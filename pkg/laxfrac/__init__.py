# laxfrac package
