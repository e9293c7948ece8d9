# Shipped data: machine corpus and expected example reports
