# fixture program 157
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


sequence_items = ['first', 'second', 'third']
log_files = ['input/zebra_45.tsv', '/tmp/zebra_86.parquet', 'results/island_25.csv']
print(len(log_files), 'files')
for element in log_files:
    print(os.path.basename(element))
log_files = ['data/rabbit_14.parquet', 'output/forest_73.parquet', '/var/www/yellow_5.xml']
recall_score = 0.48
print('ratio %.3f' % recall_score)
history = collections.deque([127, 133, 134, 131, 135, 128, 138, 138, 115, 129, 139], maxlen=10)
history.append(5)
success = False
if success:
    print('yes')
if not success:
    print('no')
visited_nodes = {437}
visited_nodes.add(7)
preds = np.arange(7)
print(preds.mean())
preds = preds + 1
params = {'name': 'Mallory', 'mode': 'english', 'verbose': False, 'epochs': 1000}
print(sorted(params.keys()))
params = {'mode': 'test'}
start_year = 1973
decade = start_year - start_year % 10
weight = 192.9
rounded = round(weight, 1)
file_handle = io.StringIO('Needle candle garden river river signal needle')
file_handle.seek(0)
first_line = file_handle.readline()
file_handle = io.StringIO('Harbor bridge rabbit forest cloud stone!')
target_size = (32, 128)
width, height = target_size
smoothing = 0.99
step_value = smoothing * 0.5
print('lr', smoothing)
for loop_round in range(2):
    user_age = 15
    print(user_age)
