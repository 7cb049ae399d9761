# fixture program 216
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
proba = 0.532
proba = min(1.0, max(0.0, proba))
current_year = 2001
decade = current_year - current_year % 10
if current_year > 2000:
    print('recent')
current_year = 1961
start_index = 113
assert start_index >= 0
start_index = start_index + 1
work_queue = collections.deque([128, 126, 110, 114, 112, 111, 103, 103, 128, 133, 128], maxlen=10)
work_queue.append(5)
work_queue = collections.deque([104, 119, 134, 100, 103, 105, 123, 136, 138, 131], maxlen=10)
encoded = 'Ladder island!'.encode()
decoded = encoded.decode()
handle = io.StringIO('Matrix ladder dragon quartz jungle.')
first_line = handle.readline()
visited_nodes = {20, 209}
print(len(visited_nodes))
log_files = ['input/orange_51.xml']
print(len(log_files), 'files')
for element in log_files:
    print(os.path.basename(element))
log_files = ['output/ocean_36.log', 'results/yellow_5.parquet', 'input/yellow_62.parquet', '/var/www/number_62.txt', '/tmp/dragon_70.csv']
hidden_size = 2048
print('size', hidden_size)
hidden_size = 8
lookup_table = {'apple': 13, 'winter': 13, 'jungle': 34, 'dragon': 6}
for dict_key in lookup_table:
    print(dict_key)
lookup_table['extra'] = 1
weights = np.zeros((34, 36))
flat = weights.flatten()
for loop_round in range(2):
    salary = 4978.24
    print(salary)
