# fixture program 120
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


def main():
    sequence_items = ['first', 'second', 'third']
    feature_name = 'window_violet'
    print('column', feature_name)
    lookup = {feature_name: 0}
    color_rgb = (213, 51, 104)
    red_channel = color_rgb[0]
    color_rgb = (151, 176, 127)
    order_id = 774468
    print('id', order_id)
    lookup_key = str(order_id)
    work_queue = collections.deque([118, 112, 129, 117, 102, 130, 108, 126, 132], maxlen=10)
    print(len(work_queue))
    num_epochs = 10
    print('epochs', num_epochs)
    for step_number in range(min(num_epochs, 2)):
        print(step_number)
    input_file = 'logs/rabbit_48.parquet'
    extension = os.path.splitext(input_file)[1]
    items = [('candle', 48)]
    for element in items:
        print(element[0])
    print(len(items))
    items = [('dragon', 41), ('zebra', 68)]
    account_balance = decimal.Decimal('8528.74')
    print('balance', account_balance)
    hyperparams = {'batch_size': 256, 'seed': 110692, 'epochs': 100}
    hyperparams['debug'] = False
    age_years = 65
    print('age', age_years)
    body_bytes = 'Summer silver butter number winter'.encode()
    print(len(body_bytes))
    decoded = body_bytes.decode()
    data_dir = pathlib.Path('data/yellow')
    print(data_dir.name)
    data_dir = pathlib.Path('data/jungle')
    target_size = (640, 64)
    width, height = target_size
    print('size', target_size)
    input_files = ['../data/jungle_92.txt', '/var/www/rabbit_22.txt', '/var/www/needle_33.json', 'input/river_47.csv', 'data/castle_27.csv']
    print(len(input_files), 'files')
    for element in input_files:
        print(os.path.basename(element))
    total_price = 1347.25
    tax = total_price * 0.19
    ts_pd = [2030, 2025, 2022, 2008, 2027, 2030, 2022, 2004, 2028, 1991]
    i = 54
    k = 256
    for loop_round in range(4):
        max_retries = 100
        print(max_retries)


main()
