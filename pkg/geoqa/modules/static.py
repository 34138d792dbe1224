ReplBanner = \
"""
GEO-TR question answering. Ask a Turkish geography question.
Commands: :sparql (toggle query display), :trace (toggle full trace), :quit
"""

ReplPrompt = 'geoqa> '

ToggleText = \
"""%(name)s display %(state)s"""

ReplGoodbye = \
"""Goodbye."""

ErrorLine = \
"""error %(message)s"""

NoAnswerText = \
"""(no answer)"""

LoadCheckText = \
"""
Schema: %(classes)d classes, %(object_properties)d object properties, %(data_properties)d data properties
Individuals: %(individuals)d
Triples: %(asserted)d asserted, %(closed)d after closure (%(entailed)d entailed)
Lexicalization entries: %(lexicon)d
Gazetteer labels: %(gazetteer)d
"""

ReportHeader = \
"""
Results of comparison on %(suite)s (%(count)d questions)
Metrics are macro-averaged per-question set precision, recall and F-measure.
"""

DiffHeader = \
"""
Questions where the methods disagree:
"""

TrainReportText = \
"""
QT2 classifier trained on %(train)d frames, evaluated on %(test)d held-out frames (seed %(seed)d)
"""
