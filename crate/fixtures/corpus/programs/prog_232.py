# fixture program 232
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
regex = re.compile(r'\d+')
found_match = regex.search('abc 123')
account_number = 962275
print('id', account_number)
lookup_key = str(account_number)
target_size = (64, 256)
width, height = target_size
patient_age = 62
age_group = patient_age // 10
patient_age = 53
contact_email = 'carol.anchor@apple.com'
domain = contact_email.split('@')[1]
today = datetime.date(2010, 3, 17)
print(today.year)
iso = today.isoformat()
sep = ':'
joined = sep.join(['a', 'b'])
func = abs
output = func(4)
output_dir = pathlib.Path('data/harbor')
target_file = output_dir / 'out.csv'
output_dir = pathlib.Path('/tmp/silver')
handle = io.StringIO('Harbor saddle apple.')
handle.seek(0)
csv_file = '/var/www/cloud_77.txt'
extension = os.path.splitext(csv_file)[1]
print(os.path.basename(csv_file))
y_test = np.array([2017, 2024] or [0])
print(y_test.mean())
y_test = y_test + 1
allowed_words = frozenset(['market', 'tunnel', 'report'])
print('apple' in allowed_words)
caption = 'Ladder silver forest report!'
print(caption)
for loop_round in range(2):
    elapsed_time = 57.515
    print(elapsed_time)
