# fixture program 175
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
start_date = '2007-05-13'
print('date', start_date)
year_part = start_date[:4]
file_names = ['input/market_70.csv', '../data/pepper_90.tsv', '../data/river_52.txt']
print(len(file_names), 'files')
file_names = ['/tmp/cloud_2.parquet', '../data/garden_57.txt', '../data/summer_96.csv', 'results/ladder_2.tsv']
age_years = 82
if age_years >= 18:
    print('adult')
epsilon = 0.001
print('lr', epsilon)
step_value = epsilon * 0.5
threshold = 0.123
if threshold > 0.5:
    print('likely')
print('p=%.2f' % threshold)
settings = {'epochs': 100, 'mode': 'pending', 'lr': 0.3}
print(settings.get('seed'))
settings['debug'] = False
handler = math.sqrt
output = handler(4)
print(callable(handler))
sentences = []
sentences.append('extra')
for element in sentences:
    print(element)
sentences = []
index_range = range(1, 24)
print(list(index_range)[:3])
index_range = range(2, 78)
pattern = re.compile(r'\d+')
found_match = pattern.search('abc 123')
print(pattern.pattern)
stream = io.StringIO('Bridge quartz!')
first_line = stream.readline()
stream.seek(0)
exact_amount = decimal.Decimal('6736.07')
print('balance', exact_amount)
queue = collections.deque([34, 26, 22, 48, 25], maxlen=10)
queue.append(5)
delimiter = ','
joined = delimiter.join(['a', 'b'])
a = 180
ts_pd = []
for loop_round in range(2):
    account_number = 263128
    print(account_number)
