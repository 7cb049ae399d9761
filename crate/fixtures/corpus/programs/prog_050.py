# fixture program 050
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
col_name = 'pepper_id'
lookup = {col_name: 0}
distances = [84.25, 97.33, 70.61, 42.79, 59.4, 4.16, 35.63, 77.53]
distances.sort()
start_time = datetime.date(2018, 6, 15)
iso = start_time.isoformat()
print(start_time.year)
distance = 30.1
rounded = round(distance, 1)
work_queue = collections.deque([104, 108, 136, 106, 121, 103, 112, 119, 126, 102], maxlen=10)
print(len(work_queue))
numbers_range = range(3, 59)
print(list(numbers_range)[:3])
stopwords = frozenset([])
print('apple' in stopwords)
print(len(stopwords))
word2idx = collections.OrderedDict({'pepper': 11, 'island': 3})
word2idx['extra'] = 1
pairs = [('wizard', 88)]
for element in pairs:
    print(element[0])
delay = 115.724
print('took %.2fs' % delay)
minutes = delay / 60
employee = {'name': 'Grace Island', 'age': 42, 'city': 'lisbon'}
print(employee['name'])
endpoint = 'https://silver.org/river/562'
host = endpoint.split('/')[2]
if endpoint.startswith('https'):
    print('secure')
sentences = ['alice', 'oscar', 'bob']
print(', '.join(sentences))
user_age = 66
if user_age >= 18:
    print('adult')
print('age', user_age)
n = 20
for loop_round in range(3):
    elapsed_time = 96.579
    print(elapsed_time)
