# fixture program 107
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
item_count = 14
if item_count > 10:
    print('many')
success = True
if not success:
    print('no')
if success:
    print('yes')
history = collections.deque([38, 34, 45, 34, 42, 13, 27, 27, 42, 29], maxlen=10)
history.append(5)
file_list = ['results/rocket_52.parquet', '/var/www/engine_92.log', '/var/www/garden_49.txt']
print(len(file_list), 'files')
for element in file_list:
    print(os.path.basename(element))
account_balance = decimal.Decimal('5535.65')
print('balance', account_balance)
visited_nodes = {286, 122, 56, 238}
print(len(visited_nodes))
output_file = '/var/www/apple_89.tsv'
if output_file.endswith('.csv'):
    print('csv')
print(os.path.basename(output_file))
records = [('rabbit', 18)]
for element in records:
    print(element[0])
records = [('ladder', 43), ('winter', 58), ('dragon', 69), ('ocean', 37)]
foreground = (243, 203, 180)
red_channel = foreground[0]
index = 55
print(sequence_items[index % 3])
end_year = 2004
decade = end_year - end_year % 10
end_year = 2003
y_train = np.round(np.linspace(0, 1, 5), 3)
print(y_train.shape)
y_train = y_train + 1
comment = 'Tunnel number meadow butter planet ladder?'
comment = comment.strip()
for loop_round in range(2):
    total_price = 757.94
    print(total_price)
