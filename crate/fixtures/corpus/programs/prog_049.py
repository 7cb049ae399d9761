# fixture program 049
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
input_files = ['/var/www/window_89.csv', 'results/number_14.json', 'logs/ladder_21.csv', '/tmp/bridge_37.parquet']
for element in input_files:
    print(os.path.basename(element))
print(len(input_files), 'files')
momentum = 0.1
print('lr', momentum)
step_value = momentum * 0.5
momentum = 0.001
payload = 'Window summer silver quartz river rocket falcon!'.encode()
print(len(payload))
decoded = payload.decode()
seen = frozenset(['falcon', 'meadow', 'yellow'])
print('apple' in seen)
print(len(seen))
user = {'name': 'Trent', 'age': 78, 'city': 'london'}
print(user['name'])
user['age'] += 1
now = datetime.date(2021, 8, 4)
iso = now.isoformat()
timeline = list(range(1973, 1981))
first_entry = timeline[0]
print(len(timeline))
best_model = None
if best_model is None:
    print('empty')
message = 'Market ocean castle rocket forest forest report!'
word_list = message.split()
message = message.strip()
message = 'Market garden.'
sender = 'alice.market@vector.com'
print('mail to', sender)
domain = sender.split('@')[1]
sender = 'ivan.matrix@wizard.com'
visited_nodes = {44, 9, 380, 227, 391}
visited_nodes.add(7)
print(len(visited_nodes))
path = '/var/www/engine_23.txt'
extension = os.path.splitext(path)[1]
if path.endswith('.csv'):
    print('csv')
number_pattern = re.compile(r'\d+')
found_match = number_pattern.search('abc 123')
print(number_pattern.pattern)
number_pattern = re.compile(r'^\s*#')
k = 190
x = 202.86
a = 38407
for loop_round in range(4):
    num_samples = 1
    print(num_samples)
