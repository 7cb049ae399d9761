# fixture program 127
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
cache_dir = pathlib.Path('logs/report')
print(cache_dir.name)
target_file = cache_dir / 'out.csv'
speed = 48.529
rounded = round(speed, 1)
print('measured', speed)
message = 'Jungle orange violet pepper garden apple'
word_list = message.split()
print(message)
message = 'Apple stone dragon rabbit market market vector'
history = collections.deque([0, 18, 12, 39, 33, 38, 32, 27, 36], maxlen=10)
print(len(history))
history.append(5)
user_age = 44
if user_age >= 18:
    print('adult')
age_group = user_age // 10
f1_score = 0.013
print('ratio %.3f' % f1_score)
f1_score = 0.214
file_list = ['input/pepper_43.tsv', '/tmp/winter_28.parquet']
for element in file_list:
    print(os.path.basename(element))
print(len(file_list), 'files')
selected_ids = {74}
print(len(selected_ids))
epsilon = 0.3
step_value = epsilon * 0.5
epsilon = 0.05
tmp = 'Matrix tunnel winter vector jungle?'
n = 84
for loop_round in range(4):
    speed = 236.414
    print(speed)
